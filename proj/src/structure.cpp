#include "qhopf/structure.hpp"

#include <sstream>

namespace qhopf {

Vec StructureTensors::product(const Vec& x, const Vec& y) const {
  const int n = dim();
  Vec r(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (!mult.at(i, j, k).is_zero()) r[k] += c * mult.at(i, j, k);
    }
  }
  return r;
}

Vec StructureTensors::product_basis(int i, int j) const {
  const int n = dim();
  Vec r(n);
  for (int k = 0; k < n; ++k) r[k] = mult.at(i, j, k);
  return r;
}

Matrix StructureTensors::coproduct(const Vec& x) const {
  const int n = dim();
  Matrix c(n, n);
  for (int k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!comult.at(k, i, j).is_zero()) c.at(i, j) += x[k] * comult.at(k, i, j);
  }
  return c;
}

Vec StructureTensors::basis_vec(int i) const {
  Vec v(dim());
  v[i] = Scalar(1);
  return v;
}

void AxiomReport::add(const std::string& axiom, std::vector<long long> where, std::string lhs,
                      std::string rhs) {
  violations.push_back({axiom, std::move(where), std::move(lhs), std::move(rhs)});
}

void AxiomReport::merge(const AxiomReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  probes.insert(probes.end(), other.probes.begin(), other.probes.end());
  checks_run += other.checks_run;
  sampled = sampled || other.sampled;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  if (pass()) {
    os << "pass (" << checks_run << " checks" << (sampled ? ", sampled" : "") << ")";
    return os.str();
  }
  os << violations.size() << " violation(s); first: " << violations[0].axiom << " at (";
  for (size_t i = 0; i < violations[0].where.size(); ++i) {
    if (i) os << ",";
    os << violations[0].where[i];
  }
  os << "): " << violations[0].lhs << " != " << violations[0].rhs;
  return os.str();
}

}  // namespace qhopf
