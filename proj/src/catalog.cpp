#include "qhopf/catalog.hpp"

#include <array>

namespace qhopf {

FiniteLoop cyclic_group(int n) {
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[i] = "g" + std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteLoop::from_cayley_table(std::move(labels), std::move(table), "e");
}

FiniteLoop symmetric_group_s3() {
  // Permutations of {0,1,2}; composition (p∘q)(i) = p(q(i)).
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
  }};
  const std::vector<std::string> labels = {"e", "s01", "s02", "s12", "c012", "c021"};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) comp[k] = perms[i][perms[j][k]];
      table[i][j] = index_of(comp);
    }
  return FiniteLoop::from_cayley_table(labels, std::move(table), "e");
}

FiniteLoop non_ip_loop_order5() {
  // Latin square with two-sided identity but one-sided inverses only:
  // the right inverse of b is d while its left inverse is c.
  std::vector<std::string> labels = {"e", "a", "b", "c", "d"};
  std::vector<std::vector<int>> table = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 3, 4, 1, 0},
      {3, 4, 0, 2, 1},
      {4, 2, 1, 0, 3},
  };
  return FiniteLoop::from_cayley_table(std::move(labels), std::move(table), "e");
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> cat;
  for (int n = 2; n <= 8; ++n)
    cat.push_back({"C" + std::to_string(n), cyclic_group(n)});
  cat.push_back({"S3", symmetric_group_s3()});
  cat.push_back({"M_C3_2", chein_double(cyclic_group(3))});
  cat.push_back({"M_S3_2", chein_double(symmetric_group_s3())});
  return cat;
}

}  // namespace qhopf
