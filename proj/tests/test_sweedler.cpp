// The 4-dimensional Sweedler Hopf algebra over the rationals: the smallest
// instance with nontrivial modular data (δ = g, τ = -1, σ ≠ σ′ ≠ id,
// S² ≠ id, noncommutative, left and right cointegrals differ). Everything
// the catalog instances leave at their trivial values gets exercised here.
//
// Basis {1, g, x, gx} with g² = 1, x² = 0, xg = -gx;
// Δ(g) = g⊗g, Δ(x) = x⊗g + 1⊗x, ε(g) = 1, ε(x) = 0,
// S(g) = g, S(x) = gx, S(gx) = -x.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhopf/duality.hpp"
#include "qhopf/hopf_quasigroup.hpp"
#include "qhopf/mhc.hpp"

using namespace qhopf;

namespace {

constexpr int kOne = 0, kG = 1, kX = 2, kGX = 3;

StructureTensors sweedler() {
  const int n = 4;
  StructureTensors t;
  t.basis = {"1", "g", "x", "gx"};
  t.mult = Tensor3(n, n, n);
  t.comult = Tensor3(n, n, n);
  t.unit = Vec(n);
  t.counit = Vec(n);
  t.antipode = Matrix(n, n);

  auto set = [&](int i, int j, int k, long c) { t.mult.at(i, j, k) = Scalar(c); };
  for (int j = 0; j < n; ++j) {
    set(kOne, j, j, 1);
    if (j != kOne) set(j, kOne, j, 1);
  }
  set(kG, kG, kOne, 1);
  set(kG, kX, kGX, 1);
  set(kG, kGX, kX, 1);
  set(kX, kG, kGX, -1);
  set(kGX, kG, kX, -1);
  // x·x = x·gx = gx·x = gx·gx = 0

  t.unit[kOne] = Scalar(1);
  t.counit[kOne] = Scalar(1);
  t.counit[kG] = Scalar(1);

  t.comult.at(kOne, kOne, kOne) = Scalar(1);
  t.comult.at(kG, kG, kG) = Scalar(1);
  t.comult.at(kX, kX, kG) = Scalar(1);
  t.comult.at(kX, kOne, kX) = Scalar(1);
  t.comult.at(kGX, kGX, kOne) = Scalar(1);
  t.comult.at(kGX, kG, kGX) = Scalar(1);

  t.antipode.at(kOne, kOne) = Scalar(1);
  t.antipode.at(kG, kG) = Scalar(1);
  t.antipode.at(kGX, kX) = Scalar(1);   // S(x) = gx
  t.antipode.at(kX, kGX) = Scalar(-1);  // S(gx) = -x
  return t;
}

}  // namespace

TEST_CASE("Sweedler algebra satisfies the Hopf-quasigroup axioms") {
  AxiomReport rep = verify_hopf_quasigroup(FinDimHopfQuasigroup{sweedler()});
  CHECK(rep.pass());
  bool assoc = false;
  for (const auto& [k, v] : rep.probes)
    if (k == "associative" && v == "true") assoc = true;
  CHECK(assoc);
}

TEST_CASE("Sweedler algebra satisfies the MHC axioms") {
  TensorMhc alg(sweedler());
  CHECK_FALSE(alg.product_commutative());
  AxiomReport rep = verify_mhc(alg);
  CHECK(rep.pass());
  bool coassoc = false;
  for (const auto& [k, v] : rep.probes)
    if (k == "coassociative" && v == "true") coassoc = true;
  CHECK(coassoc);
}

TEST_CASE("integral is the x-coefficient, cointegrals differ by side") {
  StructureTensors t = sweedler();
  auto left = integral_space(t, Side::Left);
  auto right = integral_space(t, Side::Right);
  REQUIRE(left.size() == 1);
  REQUIRE(right.size() == 1);
  Vec phi = normalized_left_integral(t);
  CHECK(phi == Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(0)});
  CHECK(is_faithful(t, phi));

  auto lco = cointegral_space(t, Side::Left);
  auto rco = cointegral_space(t, Side::Right);
  REQUIRE(lco.size() == 1);
  REQUIRE(rco.size() == 1);
  // left cointegral ∝ x + gx, right cointegral ∝ x - gx: not unimodular
  CHECK(lco[0][kX] == lco[0][kGX]);
  CHECK(rco[0][kX] == -rco[0][kGX]);
  CHECK_FALSE(lco[0][kX].is_zero());
  CHECK_FALSE(rco[0][kX].is_zero());
}

TEST_CASE("modular data: delta = g, tau = -1, sigma and sigma' diagonal") {
  TensorMhc alg(sweedler());
  MhcIntegrals ints = integrals(alg);
  CHECK(ints.phi.at(kX).is_one());
  CHECK(ints.psi.at(kGX) == Scalar(-1));  // ψ = φ∘S

  ModularData md = modular_data(alg, ints.phi);
  CHECK_FALSE(md.delta_is_unit);
  REQUIRE(md.delta.element.has_value());
  CHECK(*md.delta.element == fs_basis(kG));
  CHECK(md.tau == Scalar(-1));

  CHECK(md.sigma.fwd(fs_basis(kG)) == fs_scale(Scalar(-1), fs_basis(kG)));
  CHECK(md.sigma.fwd(fs_basis(kX)) == fs_basis(kX));
  CHECK(md.sigma.fwd(fs_basis(kGX)) == fs_scale(Scalar(-1), fs_basis(kGX)));
  CHECK(md.sigma_prime.fwd(fs_basis(kG)) == fs_scale(Scalar(-1), fs_basis(kG)));
  CHECK(md.sigma_prime.fwd(fs_basis(kX)) == fs_scale(Scalar(-1), fs_basis(kX)));
  CHECK(md.sigma_prime.fwd(fs_basis(kGX)) == fs_basis(kGX));
}

TEST_CASE("the full modular property suite holds with nontrivial data") {
  TensorMhc alg(sweedler());
  MhcIntegrals ints = integrals(alg);
  ModularData md = modular_data(alg, ints.phi);
  FinSupp xi = cointegral(alg);
  AxiomReport rep = verify_modular_properties(alg, md, ints.phi, ints.psi, &xi);
  CHECK(rep.pass());
}

TEST_CASE("integral exchange identities hold with psi distinct from phi") {
  TensorMhc alg(sweedler());
  MhcIntegrals ints = integrals(alg);
  CHECK(verify_integral_identities(alg, ints.phi, ints.psi).pass());
}

TEST_CASE("four-form conversions round-trip through nontrivial sigma and delta") {
  TensorMhc alg(sweedler());
  DualityContext ctx = DualityContext::make(alg);
  const DualForm forms[] = {DualForm::PhiRight, DualForm::PhiLeft, DualForm::PsiRight,
                            DualForm::PsiLeft};
  for (Elem i = 0; i < 4; ++i) {
    DualFunctional w{DualForm::PhiRight, fs_basis(i)};
    for (DualForm f : forms) {
      DualFunctional conv = ctx.convert(w, f);
      for (Elem u = 0; u < 4; ++u) CHECK(ctx.pair_basis(conv, u) == ctx.pair_basis(w, u));
      DualFunctional back = ctx.convert(conv, DualForm::PhiRight);
      CHECK(back.carrier == w.carrier);
    }
  }
}

TEST_CASE("dual product pairing law across all form combinations") {
  TensorMhc alg(sweedler());
  DualityContext ctx = DualityContext::make(alg);
  const DualForm forms[] = {DualForm::PhiRight, DualForm::PhiLeft, DualForm::PsiRight,
                            DualForm::PsiLeft};
  for (DualForm f1 : forms)
    for (DualForm f2 : forms)
      for (Elem i = 0; i < 4; ++i)
        for (Elem j = 0; j < 4; ++j) {
          DualFunctional a = ctx.convert(DualFunctional{DualForm::PhiRight, fs_basis(i)}, f1);
          DualFunctional b = ctx.convert(DualFunctional{DualForm::PhiRight, fs_basis(j)}, f2);
          DualFunctional prod = ctx.dual_product(a, b);
          for (Elem u = 0; u < 4; ++u) {
            Scalar raw;
            for (const auto& term : alg.coproduct_full(fs_basis(u)))
              raw += term.coef * ctx.pair_basis(a, term.first) * ctx.pair_basis(b, term.second);
            CHECK(ctx.pair_basis(prod, u) == raw);
          }
        }
}

TEST_CASE("the dual of the Sweedler algebra is again a Hopf quasigroup") {
  TensorMhc alg(sweedler());
  DualityContext ctx = DualityContext::make(alg);
  MaterializedDual dual = materialize_dual(ctx);
  CHECK(dual.consistency.pass());
  AxiomReport rep = verify_hopf_quasigroup(dual.hq);
  CHECK(rep.pass());
  CHECK(integral_space(dual.hq.t, Side::Left).size() == 1);
  CHECK(integral_space(dual.hq.t, Side::Right).size() == 1);
}

TEST_CASE("biduality holds in both directions") {
  StructureTensors t = sweedler();
  Vec phi = normalized_left_integral(t);
  Gamma g_mhc = gamma_mhc(FinDimMHC{t}, phi);
  CHECK(g_mhc.checks.pass());
  Gamma g_hq = gamma_hq(FinDimHopfQuasigroup{t}, phi);
  CHECK(g_hq.checks.pass());
}
