#pragma once

#include "qhopf/quasigroup.hpp"
#include "qhopf/structure.hpp"

namespace qhopf {

/// Unital algebra with coassociative coproduct, counit and antipode
/// satisfying the quasi-antipode identities in place of associativity.
struct FinDimHopfQuasigroup {
  StructureTensors t;
};

/// Associative unital algebra whose coproduct may fail coassociativity.
struct FinDimMHC {
  StructureTensors t;
};

enum class Side { Left, Right };

/// kG: basis = loop elements, u·v from the Cayley table, Δ(u) = u⊗u,
/// ε(u) = 1, S(u) = u⁻¹.
FinDimHopfQuasigroup group_algebra(const FiniteLoop& q);

/// Exhaustive axiom check: unit/counit laws, coassociativity, Δ and ε
/// multiplicative, S antimultiplicative and anticomultiplicative, the four
/// quasi-antipode identities, ε∘S = ε, S invertible. Associativity of the
/// product is probed and reported, never required.
AxiomReport verify_hopf_quasigroup(const FinDimHopfQuasigroup& h);

/// Basis of { λ : (id⊗λ)Δ(a) = λ(a)1 ∀a } (Left) or the mirrored space
/// (Right), as covectors.
std::vector<Vec> integral_space(const StructureTensors& t, Side side);

/// Basis of { ξ : aξ = ε(a)ξ ∀a } (Left) or { η : ηa = ε(a)η } (Right).
std::vector<Vec> cointegral_space(const StructureTensors& t, Side side);

/// Both Gram matrices f(eᵢeⱼ) and f(eⱼeᵢ) have full rank.
bool is_faithful(const StructureTensors& t, const Vec& f);

/// One-dimensional-space representative scaled so φ(ξ) = 1 when a left
/// cointegral ξ exists, else first nonzero coefficient = 1.
Vec normalized_left_integral(const StructureTensors& t);

/// The dual on the dual basis: product dual to Δ, coproduct dual to m,
/// unit = counit coefficients, counit = unit coefficients, Ŝ = Sᵀ.
/// Requires φ to be a faithful left integral on h.
FinDimMHC dual_to_mhc(const FinDimHopfQuasigroup& h, const Vec& phi);

}  // namespace qhopf
