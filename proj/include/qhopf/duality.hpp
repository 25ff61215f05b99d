#pragma once

#include <string>
#include <vector>

#include "qhopf/mhc.hpp"

namespace qhopf {

/// The four carrier forms denoting Â: φ(·a), φ(a·), ψ(·a), ψ(a·).
enum class DualForm { PhiRight, PhiLeft, PsiRight, PsiLeft };

std::string dual_form_name(DualForm f);

/// Element of Â, always carrier-backed (the infinite case has no covector
/// representation).
struct DualFunctional {
  DualForm form;
  FinSupp carrier;
};

struct DualCoproductTerm {
  DualFunctional first;
  DualFunctional second;
  Scalar coef;
};

/// Â over a fixed multiplier Hopf coquasigroup with faithful integral φ,
/// ψ = φ∘S, cointegral ξ and modular data. The referenced algebra must
/// outlive the context.
class DualityContext {
 public:
  DualityContext(const MhcAlgebra& a, MhcIntegrals ints, FinSupp xi, ModularData md);
  static DualityContext make(const MhcAlgebra& a, const std::vector<Elem>* sample = nullptr);

  const MhcAlgebra& algebra() const { return *a_; }
  const Integral& phi() const { return ints_.phi; }
  const Integral& psi() const { return ints_.psi; }
  const FinSupp& xi() const { return xi_; }
  const ModularData& modular() const { return md_; }

  /// ⟨w, x⟩, evaluated through the carrier; form-independent.
  Scalar pair(const DualFunctional& w, const FinSupp& x) const;
  Scalar pair_basis(const DualFunctional& w, Elem u) const;

  /// Carrier transport between the four forms (δ for φ↔ψ, σ and σ′ for
  /// left↔right slots). Round-trips exactly.
  DualFunctional convert(const DualFunctional& w, DualForm target) const;

  /// (ww′)(x) = (w⊗w′)Δ(x), computed by the carrier formulas with every
  /// leg through T-maps.
  DualFunctional dual_product(const DualFunctional& w, const DualFunctional& wp) const;

  /// ε = φ(· ξ/φ(ξ)), the unit of Â.
  DualFunctional dual_unit() const;

  /// ⟨Δ̂(w), x⊗y⟩ = w(xy).
  Scalar dual_coproduct_pair(const DualFunctional& w, const FinSupp& x, const FinSupp& y) const;

  /// The constructive split Δ̂(ψ(b·)) = Σ ψ((1/ψS(ξ))S(ξ₍₂₎)·) ⊗ ψ(bξ₍₁₎·)
  /// (finite carriers: Δ(ξ) must be materialized).
  std::vector<DualCoproductTerm> dual_coproduct_split(const DualFunctional& w) const;

  Scalar dual_counit(const DualFunctional& w) const;       // ε̂(φ(·a)) = φ(a)
  DualFunctional dual_antipode(const DualFunctional& w) const;      // Ŝ(w) = w∘S
  DualFunctional dual_antipode_inv(const DualFunctional& w) const;

  Scalar dual_integral_phi(const DualFunctional& w) const;  // φ̂(ψ(a·)) = ε(a)
  Scalar dual_integral_psi(const DualFunctional& w) const;  // ψ̂(φ(·a)) = ε(a)

 private:
  const MhcAlgebra* a_;
  MhcIntegrals ints_;
  FinSupp xi_;
  ModularData md_;
};

/// Â materialized on the basis w_i = φ(·e_i), together with the dual
/// integrals and the lazy-vs-materialized agreement report.
struct MaterializedDual {
  FinDimHopfQuasigroup hq;
  Vec phi_hat;
  Vec psi_hat;
  AxiomReport consistency;
};

MaterializedDual materialize_dual(const DualityContext& ctx);

/// Biduality isomorphism Γ(h)(f) = f(h), built by the carrier recipe
/// Γ(h) = ψ̂(·φ(·S(h))) and checked against evaluation, multiplication,
/// comultiplication, counit and antipode.
struct Gamma {
  Matrix forward;   // columns: Γ(e_i) on the bidual basis
  Matrix inverse;
  StructureTensors dual;
  StructureTensors bidual;
  AxiomReport checks;
};

Gamma gamma_hq(const FinDimHopfQuasigroup& h, const Vec& phi);
Gamma gamma_mhc(const FinDimMHC& a, const Vec& phi);

}  // namespace qhopf
