#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhopf/catalog.hpp"
#include "qhopf/quasigroup.hpp"

using namespace qhopf;

namespace {

// Independent of FiniteLoop::is_associative: raw table walk.
bool table_associative(const FiniteLoop& q) {
  const auto& t = q.table();
  const int n = q.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

}  // namespace

TEST_CASE("from_cayley_table accepts C2") {
  auto c2 = FiniteLoop::from_cayley_table({"e", "g"}, {{0, 1}, {1, 0}}, "e");
  CHECK(c2.order() == 2);
  CHECK(c2.identity() == 0);
  CHECK(c2.product(1, 1) == 0);
}

TEST_CASE("from_cayley_table rejects repeated column entries") {
  CHECK_THROWS_AS(FiniteLoop::from_cayley_table({"e", "g"}, {{0, 0}, {1, 1}}, "e"),
                  NotLatinSquare);
}

TEST_CASE("from_cayley_table rejects bad shapes and ranges") {
  CHECK_THROWS_AS(FiniteLoop::from_cayley_table({"e", "g"}, {{0, 1}}, "e"), BadShape);
  CHECK_THROWS_AS(FiniteLoop::from_cayley_table({"e", "g"}, {{0, 5}, {1, 0}}, "e"), BadShape);
}

TEST_CASE("order-5 Latin square without a two-sided identity is rejected") {
  // table[i][j] = (2i + j) mod 5: a Latin square where 0 is only a left
  // identity, so no label can pass the identity check.
  std::vector<std::vector<int>> t(5, std::vector<int>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) t[i][j] = (2 * i + j) % 5;
  std::vector<std::string> labels = {"a0", "a1", "a2", "a3", "a4"};
  for (const auto& lab : labels)
    CHECK_THROWS_AS(FiniteLoop::from_cayley_table(labels, t, lab), NoIdentity);
}

TEST_CASE("S3 is associative, brute force over all 216 triples") {
  CHECK(table_associative(symmetric_group_s3()));
}

TEST_CASE("check_ip passes on groups") {
  IpReport r = check_ip(QuasigroupHandle(cyclic_group(4)));
  CHECK(r.pass());
  CHECK_FALSE(r.sampled);
}

TEST_CASE("check_ip passes on the Chein double of S3 with 144 pairs") {
  IpReport r = check_ip(QuasigroupHandle(chein_double(symmetric_group_s3())));
  CHECK(r.pass());
  CHECK(r.pairs_checked == 144);
}

TEST_CASE("the order-5 negative control fails IP") {
  FiniteLoop q = non_ip_loop_order5();
  IpReport r = check_ip(QuasigroupHandle(q));
  CHECK_FALSE(r.pass());
}

TEST_CASE("chein_double of C2 is an associative loop of order 4") {
  FiniteLoop m = chein_double(cyclic_group(2));
  CHECK(m.order() == 4);
  CHECK(table_associative(m));
  CHECK(check_ip(QuasigroupHandle(m)).pass());
}

TEST_CASE("chein_double of C3 is an associative loop of order 6") {
  FiniteLoop m = chein_double(cyclic_group(3));
  CHECK(m.order() == 6);
  CHECK(table_associative(m));
}

TEST_CASE("chein_double is associative exactly on the abelian catalog inputs") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(table_associative(chein_double(cyclic_group(k))));
  }
  CHECK_FALSE(table_associative(chein_double(symmetric_group_s3())));
}

TEST_CASE("chein_double of S3 is a nonassociative IP loop of order 12") {
  FiniteLoop m = chein_double(symmetric_group_s3());
  CHECK(m.order() == 12);
  CHECK_FALSE(table_associative(m));
  // brute-force search finds a witness triple
  bool found = false;
  for (int a = 0; a < 12 && !found; ++a)
    for (int b = 0; b < 12 && !found; ++b)
      for (int c = 0; c < 12 && !found; ++c)
        if (m.product(m.product(a, b), c) != m.product(a, m.product(b, c))) found = true;
  CHECK(found);
  CHECK(check_ip(QuasigroupHandle(m)).pass());
}

TEST_CASE("chein_double rejects nonassociative input") {
  FiniteLoop m12 = chein_double(symmetric_group_s3());
  CHECK_THROWS_AS(chein_double(m12), NotAssociative);
}

TEST_CASE("divisions solve their defining equations") {
  QuasigroupHandle c2{cyclic_group(2)};
  CHECK(c2.left_divide(1, 0) == 1);  // g·v = e  =>  v = g

  QuasigroupHandle m12{chein_double(symmetric_group_s3())};
  for (Elem u = 0; u < 12; ++u)
    for (Elem w = 0; w < 12; ++w) {
      CHECK(m12.product(u, m12.left_divide(u, w)) == w);
      CHECK(m12.product(m12.right_divide(w, u), u) == w);
    }
}

TEST_CASE("inverses are involutive on IP loops") {
  for (const auto& entry : builtin_catalog()) {
    QuasigroupHandle q{entry.loop};
    for (Elem u = 0; u < entry.loop.order(); ++u) CHECK(q.inverse(q.inverse(u)) == u);
  }
}

TEST_CASE("text format parses and validates") {
  std::string text =
      "3\n"
      "e a b\n"
      "e a b\n"
      "a b e\n"
      "b e a\n";
  FiniteLoop q = parse_loop_text(text);
  CHECK(q.order() == 3);
  CHECK(q.product(1, 1) == 2);
}

TEST_CASE("text format errors carry line numbers") {
  try {
    parse_loop_text("2\ne g\ne g\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
  try {
    parse_loop_text("2\ne\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("json format parses") {
  std::string json = R"({"labels": ["e", "g"], "table": [[0, 1], [1, 0]], "identity": "e"})";
  FiniteLoop q = parse_loop_text(json);
  CHECK(q.order() == 2);
  CHECK(q.product(1, 1) == 0);
}

TEST_CASE("integer oracle divisions") {
  QuasigroupHandle z{integer_addition_oracle()};
  CHECK(z.left_divide(3, 10) == 7);
  CHECK(z.right_divide(10, 3) == 7);
  CHECK(z.inverse(5) == -5);
}

TEST_CASE("check_ip on an oracle requires a sample") {
  QuasigroupHandle z{integer_addition_oracle()};
  CHECK_THROWS_AS(check_ip(z), SampleRequired);
  std::vector<Elem> sample = {-4, -1, 0, 2, 9};
  IpReport r = check_ip(z, &sample);
  CHECK(r.pass());
  CHECK(r.sampled);
}

TEST_CASE("broken oracle is caught by division verification") {
  OracleQuasigroup broken;
  broken.product = [](Elem a, Elem b) { return a + b; };
  broken.identity = 0;
  broken.inverse = [](Elem a) { return a; };  // wrong except at 0
  QuasigroupHandle q{broken};
  CHECK_THROWS_AS(q.left_divide(3, 10), OracleInconsistent);
}
