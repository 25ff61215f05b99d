#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhopf/catalog.hpp"
#include "qhopf/duality.hpp"

using namespace qhopf;

namespace {

FiniteLoop m12() { return chein_double(symmetric_group_s3()); }

DualFunctional w_basis(Elem u) { return {DualForm::PhiRight, fs_basis(u)}; }

FinSupp random_elem(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> coef(-2, 2);
  FinSupp r;
  for (int u = 0; u < n; ++u) fs_accumulate(r, u, Scalar(coef(rng)));
  return r;
}

}  // namespace

TEST_CASE("pairing of w_u against the delta basis") {
  auto fa = function_algebra(QuasigroupHandle(symmetric_group_s3()));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 6; ++u)
    for (Elem v = 0; v < 6; ++v) {
      Scalar expect = (u == v) ? Scalar(1) : Scalar(0);
      CHECK(ctx.pair_basis(w_basis(u), v) == expect);  // φ(δ_vδ_u) = [u=v]
    }
}

TEST_CASE("four-form conversion round-trips with identical pairings") {
  auto fa = function_algebra(QuasigroupHandle(symmetric_group_s3()));
  DualityContext ctx = DualityContext::make(*fa);
  std::mt19937_64 rng(11);
  const DualForm forms[] = {DualForm::PhiRight, DualForm::PhiLeft, DualForm::PsiRight,
                            DualForm::PsiLeft};
  for (int trial = 0; trial < 20; ++trial) {
    DualFunctional w{DualForm::PhiRight, random_elem(rng, 6)};
    for (DualForm f : forms) {
      DualFunctional converted = ctx.convert(w, f);
      DualFunctional back = ctx.convert(converted, DualForm::PhiRight);
      for (Elem u = 0; u < 6; ++u) {
        CHECK(ctx.pair_basis(converted, u) == ctx.pair_basis(w, u));
        CHECK(ctx.pair_basis(back, u) == ctx.pair_basis(w, u));
      }
    }
  }
}

TEST_CASE("conversion agrees on the wrapped group algebra too") {
  FinDimHopfQuasigroup kg = group_algebra(cyclic_group(4));
  TensorMhc alg(kg.t);
  DualityContext ctx = DualityContext::make(alg);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    DualFunctional w{DualForm::PhiRight, random_elem(rng, 4)};
    DualFunctional psi_form = ctx.convert(w, DualForm::PsiLeft);
    for (Elem u = 0; u < 4; ++u) CHECK(ctx.pair_basis(psi_form, u) == ctx.pair_basis(w, u));
  }
}

TEST_CASE("dual product of k(G) realizes the loop product: w_u w_v = w_uv") {
  FiniteLoop q = m12();
  auto fa = function_algebra(QuasigroupHandle(q));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 12; ++u)
    for (Elem v = 0; v < 12; ++v) {
      DualFunctional got = ctx.dual_product(w_basis(u), w_basis(v));
      FinSupp carrier = ctx.convert(got, DualForm::PhiRight).carrier;
      CHECK(carrier == fs_basis(q.product(static_cast<int>(u), static_cast<int>(v))));
    }
}

TEST_CASE("the dual unit is the normalized cointegral and is two-sided") {
  auto fa = function_algebra(QuasigroupHandle(cyclic_group(3)));
  DualityContext ctx = DualityContext::make(*fa);
  DualFunctional unit = ctx.dual_unit();
  CHECK(unit.carrier == fs_basis(0));  // ξ/φ(ξ) = δ_e
  for (Elem u = 0; u < 3; ++u) {
    auto l = ctx.convert(ctx.dual_product(unit, w_basis(u)), DualForm::PhiRight);
    auto r = ctx.convert(ctx.dual_product(w_basis(u), unit), DualForm::PhiRight);
    CHECK(l.carrier == fs_basis(u));
    CHECK(r.carrier == fs_basis(u));
  }
}

TEST_CASE("pairing law holds for every combination of carrier forms") {
  auto fa = function_algebra(QuasigroupHandle(symmetric_group_s3()));
  DualityContext ctx = DualityContext::make(*fa);
  const DualForm forms[] = {DualForm::PhiRight, DualForm::PhiLeft, DualForm::PsiRight,
                            DualForm::PsiLeft};
  for (DualForm f1 : forms)
    for (DualForm f2 : forms)
      for (Elem i = 0; i < 6; ++i)
        for (Elem j = 0; j < 6; ++j) {
          DualFunctional a = ctx.convert(w_basis(i), f1);
          DualFunctional b = ctx.convert(w_basis(j), f2);
          DualFunctional prod = ctx.dual_product(a, b);
          for (Elem u = 0; u < 6; ++u) {
            Scalar raw;
            for (const auto& term : fa->coproduct_full(fs_basis(u)))
              raw += term.coef * ctx.pair_basis(a, term.first) * ctx.pair_basis(b, term.second);
            CHECK(ctx.pair_basis(prod, u) == raw);
          }
        }
}

TEST_CASE("mixed-form products route through conversion") {
  FiniteLoop q = symmetric_group_s3();
  auto fa = function_algebra(QuasigroupHandle(q));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 6; ++u)
    for (Elem v = 0; v < 6; ++v) {
      // left factor in φ-form, right factor in ψ-form: the fallback path
      DualFunctional left{DualForm::PhiRight, fs_basis(u)};
      DualFunctional right{DualForm::PsiLeft, fs_basis(v)};
      DualFunctional got = ctx.dual_product(left, right);
      FinSupp expect = fs_basis(q.product(static_cast<int>(u), static_cast<int>(v)));
      CHECK(ctx.convert(got, DualForm::PhiRight).carrier == expect);
    }
}

TEST_CASE("pairing law <ww', x> = <w⊗w', Δ(x)> on all basis triples") {
  auto fa = function_algebra(QuasigroupHandle(symmetric_group_s3()));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem i = 0; i < 6; ++i)
    for (Elem j = 0; j < 6; ++j) {
      DualFunctional prod = ctx.dual_product(w_basis(i), w_basis(j));
      for (Elem u = 0; u < 6; ++u) {
        Scalar raw;
        for (const auto& term : fa->coproduct_full(fs_basis(u)))
          raw += term.coef * ctx.pair_basis(w_basis(i), term.first) *
                 ctx.pair_basis(w_basis(j), term.second);
        CHECK(ctx.pair_basis(prod, u) == raw);
      }
    }
}

TEST_CASE("dual product picks up a nonassociativity witness on k(M(S3,2))") {
  auto fa = function_algebra(QuasigroupHandle(m12()));
  DualityContext ctx = DualityContext::make(*fa);
  bool found = false;
  for (Elem u = 0; u < 12 && !found; ++u)
    for (Elem v = 0; v < 12 && !found; ++v)
      for (Elem t = 0; t < 12 && !found; ++t) {
        auto left = ctx.convert(
            ctx.dual_product(ctx.dual_product(w_basis(u), w_basis(v)), w_basis(t)),
            DualForm::PhiRight);
        auto right = ctx.convert(
            ctx.dual_product(w_basis(u), ctx.dual_product(w_basis(v), w_basis(t))),
            DualForm::PhiRight);
        if (!(left.carrier == right.carrier)) found = true;
      }
  CHECK(found);
}

TEST_CASE("dual coproduct of k(G) is grouplike and coassociative") {
  auto fa = function_algebra(QuasigroupHandle(cyclic_group(4)));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 4; ++u) {
    // ⟨Δ̂(w_u), δ_x⊗δ_y⟩ = [x = y = u]
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) {
        Scalar expect = (x == u && y == u) ? Scalar(1) : Scalar(0);
        CHECK(ctx.dual_coproduct_pair(w_basis(u), fs_basis(x), fs_basis(y)) == expect);
      }
    // split form reproduces the pairing
    auto split = ctx.dual_coproduct_split(w_basis(u));
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) {
        Scalar acc;
        for (const auto& term : split)
          acc += term.coef * ctx.pair_basis(term.first, x) * ctx.pair_basis(term.second, y);
        CHECK(acc == ctx.dual_coproduct_pair(w_basis(u), fs_basis(x), fs_basis(y)));
      }
  }
}

TEST_CASE("dual coproduct is coassociative even when the dual product is not") {
  auto fa = function_algebra(QuasigroupHandle(m12()));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 12; ++u) {
    auto split = ctx.dual_coproduct_split(w_basis(u));
    for (Elem x = 0; x < 12; x += 3)
      for (Elem y = 0; y < 12; y += 3)
        for (Elem z = 0; z < 12; z += 3) {
          Scalar lhs, rhs;
          for (const auto& outer : split) {
            for (const auto& inner : ctx.dual_coproduct_split(outer.first))
              lhs += outer.coef * inner.coef * ctx.pair_basis(inner.first, x) *
                     ctx.pair_basis(inner.second, y) * ctx.pair_basis(outer.second, z);
            for (const auto& inner : ctx.dual_coproduct_split(outer.second))
              rhs += outer.coef * inner.coef * ctx.pair_basis(outer.first, x) *
                     ctx.pair_basis(inner.first, y) * ctx.pair_basis(inner.second, z);
          }
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("dual coproduct is an algebra homomorphism (Prop 4.4)") {
  auto fa = function_algebra(QuasigroupHandle(symmetric_group_s3()));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem i = 0; i < 6; ++i)
    for (Elem j = 0; j < 6; ++j) {
      DualFunctional prod = ctx.dual_product(w_basis(i), w_basis(j));
      auto si = ctx.dual_coproduct_split(w_basis(i));
      auto sj = ctx.dual_coproduct_split(w_basis(j));
      for (Elem x = 0; x < 6; ++x)
        for (Elem y = 0; y < 6; ++y) {
          Scalar lhs = ctx.dual_coproduct_pair(prod, fs_basis(x), fs_basis(y));
          Scalar rhs;
          for (const auto& a : si)
            for (const auto& b : sj)
              rhs += a.coef * b.coef *
                     ctx.pair_basis(ctx.dual_product(a.first, b.first), x) *
                     ctx.pair_basis(ctx.dual_product(a.second, b.second), y);
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dual counit evaluates the integral of the carrier") {
  auto fa = function_algebra(QuasigroupHandle(cyclic_group(5)));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 5; ++u) {
    CHECK(ctx.dual_counit(w_basis(u)).is_one());  // ε̂(w_u) = φ(δ_u) = 1
    CHECK(ctx.dual_counit(w_basis(u)) == ctx.pair(w_basis(u), fa->one()));
  }
  // ε̂ is an algebra homomorphism (Prop 4.5)
  for (Elem i = 0; i < 5; ++i)
    for (Elem j = 0; j < 5; ++j)
      CHECK(ctx.dual_counit(ctx.dual_product(w_basis(i), w_basis(j))) ==
            ctx.dual_counit(w_basis(i)) * ctx.dual_counit(w_basis(j)));
}

TEST_CASE("dual antipode transports carriers through the inverse") {
  FiniteLoop q = m12();
  auto fa = function_algebra(QuasigroupHandle(q));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 12; ++u) {
    DualFunctional s = ctx.dual_antipode(w_basis(u));
    // Ŝ(w_u) = w_{u⁻¹}
    CHECK(ctx.convert(s, DualForm::PhiRight).carrier == fs_basis(q.inverse(static_cast<int>(u))));
    // pointwise: Ŝ(w)(x) = w(S(x))
    for (Elem x = 0; x < 12; ++x)
      CHECK(ctx.pair_basis(s, x) == ctx.pair(w_basis(u), fa->antipode(fs_basis(x))));
    // round trip
    CHECK(ctx.convert(ctx.dual_antipode_inv(s), DualForm::PhiRight).carrier == fs_basis(u));
  }
}

TEST_CASE("dual integrals: phi_hat is evaluation at the identity carrier") {
  auto fa = function_algebra(QuasigroupHandle(cyclic_group(3)));
  DualityContext ctx = DualityContext::make(*fa);
  for (Elem u = 0; u < 3; ++u) {
    Scalar expect = (u == 0) ? Scalar(1) : Scalar(0);
    CHECK(ctx.dual_integral_phi(w_basis(u)) == expect);  // ε(δ_u)
    CHECK(ctx.dual_integral_psi(w_basis(u)) == expect);
  }
  CHECK(ctx.dual_integral_phi(ctx.dual_unit()).is_one());
}

TEST_CASE("materialized dual passes its consistency report and Thm 4.7") {
  for (const auto& entry : builtin_catalog()) {
    if (entry.loop.order() > 8 && entry.name != "M_S3_2") continue;
    CAPTURE(entry.name);
    auto fa = function_algebra(QuasigroupHandle(entry.loop));
    DualityContext ctx = DualityContext::make(*fa);
    MaterializedDual dual = materialize_dual(ctx);
    CHECK(dual.consistency.pass());
    CHECK(verify_hopf_quasigroup(dual.hq).pass());
    // integral space of the materialized dual is one-dimensional
    CHECK(integral_space(dual.hq.t, Side::Left).size() == 1);
    CHECK(integral_space(dual.hq.t, Side::Right).size() == 1);
  }
}

TEST_CASE("gamma on kC2 reproduces the Example 5.3 identification") {
  FinDimHopfQuasigroup kg = group_algebra(cyclic_group(2));
  Gamma g = gamma_hq(kg, normalized_left_integral(kg.t));
  CHECK(g.checks.pass());
  CHECK(g.forward == Matrix::identity(2));  // Γ(u) = ψ̂(·δ_u)
}

TEST_CASE("gamma on k(C2) reproduces the Example 5.3 identification") {
  auto fa = function_algebra(QuasigroupHandle(cyclic_group(2)));
  Gamma g = gamma_mhc(FinDimMHC{materialize_tensors(*fa)}, Vec(2, Scalar(1)));
  CHECK(g.checks.pass());
  CHECK(g.forward == Matrix::identity(2));  // Γ(δ_u) = u under the identification
}

TEST_CASE("gamma is a verified isomorphism on the Moufang instance") {
  FiniteLoop q = m12();
  FinDimHopfQuasigroup kg = group_algebra(q);
  Gamma ghq = gamma_hq(kg, normalized_left_integral(kg.t));
  CHECK(ghq.checks.pass());

  auto fa = function_algebra(QuasigroupHandle(q));
  Gamma gmhc = gamma_mhc(FinDimMHC{materialize_tensors(*fa)}, Vec(12, Scalar(1)));
  CHECK(gmhc.checks.pass());
}

TEST_CASE("gamma_mhc rejects functionals outside the integral line") {
  auto fa = function_algebra(QuasigroupHandle(cyclic_group(2)));
  StructureTensors t = materialize_tensors(*fa);
  Vec bogus{Scalar(1), Scalar(2)};
  CHECK_THROWS_AS(gamma_mhc(FinDimMHC{t}, bogus), NotIntegral);
}
