#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qhopf/hopf_quasigroup.hpp"
#include "qhopf/quasigroup.hpp"
#include "qhopf/structure.hpp"

namespace qhopf {

/// Finitely supported element of A: label → coefficient, zeros never stored.
using FinSupp = std::map<Elem, Scalar>;

FinSupp fs_basis(Elem u);
FinSupp fs_add(const FinSupp& a, const FinSupp& b);
FinSupp fs_sub(const FinSupp& a, const FinSupp& b);
FinSupp fs_scale(const Scalar& c, const FinSupp& a);
void fs_accumulate(FinSupp& into, Elem u, const Scalar& c);
void fs_prune(FinSupp& a);
bool fs_is_zero(const FinSupp& a);
std::vector<Elem> fs_support(const FinSupp& a);

struct PairTerm {
  Elem first;
  Elem second;
  Scalar coef;
};
/// Element of A⊗A as a finite sum of basis⊗basis terms, sorted, no zeros.
using PairTensor = std::vector<PairTerm>;

using PairMap = std::map<std::pair<Elem, Elem>, Scalar>;
PairMap pair_map(const PairTensor& t);
void pair_accumulate(PairMap& into, const FinSupp& x, const FinSupp& y, const Scalar& c);

/// A nondegenerate associative algebra with coproduct into M(A⊗A), counit
/// and antipode. The coproduct is never materialized; it is reached through
/// the canonical maps T₁, T₂ and through term selection by one leg, all of
/// which land in A⊗A even over an infinite carrier.
class MhcAlgebra {
 public:
  virtual ~MhcAlgebra() = default;

  virtual FinSupp product(const FinSupp& a, const FinSupp& b) const = 0;
  virtual Scalar counit(const FinSupp& a) const = 0;
  virtual FinSupp antipode(const FinSupp& a) const = 0;
  virtual FinSupp antipode_inv(const FinSupp& a) const = 0;

  virtual PairTensor t1(const FinSupp& a, const FinSupp& b) const = 0;  // Δ(a)(1⊗b)
  virtual PairTensor t2(const FinSupp& a, const FinSupp& b) const = 0;  // (a⊗1)Δ(b)
  virtual PairTensor t1_leftmul(const FinSupp& a, const FinSupp& b) const = 0;   // (1⊗b)Δ(a)
  virtual PairTensor t2_rightmul(const FinSupp& a, const FinSupp& b) const = 0;  // Δ(b)(a⊗1)

  /// (g⊗id)Δ(b) and (id⊗g)Δ(b) for a finitely supported functional g.
  virtual FinSupp contract_first(const FinSupp& g, const FinSupp& b) const = 0;
  virtual FinSupp contract_second(const FinSupp& b, const FinSupp& g) const = 0;

  /// Terms of Δ(a) whose first (resp. second) leg lies in the given label
  /// set. Backed by divisions on function algebras.
  virtual PairTensor coproduct_first_in(const FinSupp& a, const std::vector<Elem>& firsts) const = 0;
  virtual PairTensor coproduct_second_in(const FinSupp& a, const std::vector<Elem>& seconds) const = 0;

  /// Covering label sets for finite evaluations; may over-approximate.
  virtual std::vector<Elem> candidates_mul(const std::vector<Elem>& labels) const = 0;
  virtual std::vector<Elem> candidates_antipode_hits(const std::vector<Elem>& labels) const = 0;
  virtual std::vector<Elem> candidates_antipode_inv_hits(const std::vector<Elem>& labels) const = 0;
  virtual std::vector<Elem> middle_candidates(const FinSupp& a, const std::vector<Elem>& xs,
                                              const std::vector<Elem>& ys) const = 0;

  virtual bool finite() const = 0;
  virtual bool is_function_algebra() const { return false; }
  virtual bool product_commutative() const = 0;
  virtual int dim() const;
  virtual std::vector<Elem> basis_labels() const;
  virtual FinSupp one() const;
  virtual std::string elem_name(Elem u) const = 0;

  /// Full coproduct of a (finite carriers only).
  PairTensor coproduct_full(const FinSupp& a) const;
};

/// k(G): pointwise product on finitely supported functions on a quasigroup,
/// ε(δ_u) = [u=e], S(δ_u) = δ_{u⁻¹}, Δ(δ_u) = Σ_v δ_v⊗δ_{v⁻¹u} reachable
/// only through T-maps. The antipode label map can be overridden to build
/// broken instances for negative controls.
class FunctionAlgebra : public MhcAlgebra {
 public:
  explicit FunctionAlgebra(QuasigroupHandle q);
  FunctionAlgebra(QuasigroupHandle q, std::function<Elem(Elem)> antipode_label,
                  std::function<Elem(Elem)> antipode_label_inv);
  // the default antipode closes over this object
  FunctionAlgebra(const FunctionAlgebra&) = delete;
  FunctionAlgebra& operator=(const FunctionAlgebra&) = delete;

  const QuasigroupHandle& carrier() const { return q_; }
  Elem s_label(Elem u) const { return s_(u); }
  Elem s_label_inv(Elem u) const { return s_inv_(u); }

  FinSupp product(const FinSupp& a, const FinSupp& b) const override;
  Scalar counit(const FinSupp& a) const override;
  FinSupp antipode(const FinSupp& a) const override;
  FinSupp antipode_inv(const FinSupp& a) const override;
  PairTensor t1(const FinSupp& a, const FinSupp& b) const override;
  PairTensor t2(const FinSupp& a, const FinSupp& b) const override;
  PairTensor t1_leftmul(const FinSupp& a, const FinSupp& b) const override;
  PairTensor t2_rightmul(const FinSupp& a, const FinSupp& b) const override;
  FinSupp contract_first(const FinSupp& g, const FinSupp& b) const override;
  FinSupp contract_second(const FinSupp& b, const FinSupp& g) const override;
  PairTensor coproduct_first_in(const FinSupp& a, const std::vector<Elem>& firsts) const override;
  PairTensor coproduct_second_in(const FinSupp& a, const std::vector<Elem>& seconds) const override;
  std::vector<Elem> candidates_mul(const std::vector<Elem>& labels) const override;
  std::vector<Elem> candidates_antipode_hits(const std::vector<Elem>& labels) const override;
  std::vector<Elem> candidates_antipode_inv_hits(const std::vector<Elem>& labels) const override;
  std::vector<Elem> middle_candidates(const FinSupp& a, const std::vector<Elem>& xs,
                                      const std::vector<Elem>& ys) const override;
  bool finite() const override { return q_.finite(); }
  bool is_function_algebra() const override { return true; }
  bool product_commutative() const override { return true; }
  int dim() const override;
  std::vector<Elem> basis_labels() const override;
  FinSupp one() const override;
  std::string elem_name(Elem u) const override { return q_.label(u); }

 private:
  QuasigroupHandle q_;
  std::function<Elem(Elem)> s_, s_inv_;
};

/// Finite-dimensional algebra given by structure tensors (duals of group
/// algebras, wrapped group algebras, materialized duals).
class TensorMhc : public MhcAlgebra {
 public:
  explicit TensorMhc(StructureTensors t);

  const StructureTensors& tensors() const { return t_; }
  Vec to_vec(const FinSupp& a) const;
  FinSupp from_vec(const Vec& v) const;

  FinSupp product(const FinSupp& a, const FinSupp& b) const override;
  Scalar counit(const FinSupp& a) const override;
  FinSupp antipode(const FinSupp& a) const override;
  FinSupp antipode_inv(const FinSupp& a) const override;
  PairTensor t1(const FinSupp& a, const FinSupp& b) const override;
  PairTensor t2(const FinSupp& a, const FinSupp& b) const override;
  PairTensor t1_leftmul(const FinSupp& a, const FinSupp& b) const override;
  PairTensor t2_rightmul(const FinSupp& a, const FinSupp& b) const override;
  FinSupp contract_first(const FinSupp& g, const FinSupp& b) const override;
  FinSupp contract_second(const FinSupp& b, const FinSupp& g) const override;
  PairTensor coproduct_first_in(const FinSupp& a, const std::vector<Elem>& firsts) const override;
  PairTensor coproduct_second_in(const FinSupp& a, const std::vector<Elem>& seconds) const override;
  std::vector<Elem> candidates_mul(const std::vector<Elem>& labels) const override;
  std::vector<Elem> candidates_antipode_hits(const std::vector<Elem>& labels) const override;
  std::vector<Elem> candidates_antipode_inv_hits(const std::vector<Elem>& labels) const override;
  std::vector<Elem> middle_candidates(const FinSupp& a, const std::vector<Elem>& xs,
                                      const std::vector<Elem>& ys) const override;
  bool finite() const override { return true; }
  bool product_commutative() const override { return commutative_; }
  int dim() const override { return t_.dim(); }
  std::vector<Elem> basis_labels() const override;
  FinSupp one() const override { return from_vec(t_.unit); }
  std::string elem_name(Elem u) const override { return t_.basis[static_cast<size_t>(u)]; }

 private:
  const Matrix& antipode_inverse() const;
  StructureTensors t_;
  bool commutative_ = false;
  std::optional<Matrix> antipode_inv_;  // set at construction when S is invertible
};

/// Builds k(G). Finite carriers are checked for IP exhaustively; oracle
/// carriers need an ip_sample (spot check, recorded as sampled).
std::unique_ptr<FunctionAlgebra> function_algebra(QuasigroupHandle q,
                                                  const std::vector<Elem>* ip_sample = nullptr);

/// Structure tensors of a finite algebra (basis labels must be 0..n-1).
StructureTensors materialize_tensors(const MhcAlgebra& a);

/// Functional on A defined by per-basis weights; total on finitely
/// supported elements even over an infinite carrier.
class Integral {
 public:
  Integral() = default;
  explicit Integral(std::function<Scalar(Elem)> weight) : weight_(std::move(weight)) {}
  Scalar operator()(const FinSupp& x) const;
  Scalar at(Elem u) const { return weight_(u); }
  Integral scaled(const Scalar& c) const;

 private:
  std::function<Scalar(Elem)> weight_;
};

struct MhcIntegrals {
  Integral phi;  // left, normalized so φ(ξ) = 1 when a cointegral ξ exists
  Integral psi;  // φ∘S, a right integral
};

/// φ and ψ = φ∘S. Function algebras get the coefficient-sum functional;
/// tensor algebras solve the defining system (NoIntegral when the kernel is
/// trivial, NotFaithful when a Gram matrix is singular).
MhcIntegrals integrals(const MhcAlgebra& a);

/// Left cointegral ξ with aξ = ε(a)ξ; δ_e for function algebras, kernel
/// solve for tensor algebras. NotDiscreteType when none exists.
FinSupp cointegral(const MhcAlgebra& a, const std::vector<Elem>* sample = nullptr);

/// e with aᵢe = aᵢ = eaᵢ for all i; the minimal-support indicator on
/// function algebras, the unit on finite tensor algebras. Post-verified.
FinSupp local_unit(const MhcAlgebra& a, const std::vector<FinSupp>& elems);

/// Axioms (2.1)/(2.2) in T-map form, the counit laws through T₁/T₂,
/// antipode antimultiplicativity and anticomultiplicativity, the two
/// antipode-cancellation identities, associativity and (finite case)
/// nondegeneracy and unit laws. Coassociativity is probed and reported,
/// never required.
AxiomReport verify_mhc(const MhcAlgebra& a, const std::vector<Elem>* sample = nullptr);

/// The four identities of (3.1)/(3.2), every leg through T-maps.
AxiomReport verify_integral_identities(const MhcAlgebra& a, const Integral& phi,
                                       const Integral& psi,
                                       const std::vector<Elem>* sample = nullptr);

/// Element of M(A) as a compatible action pair; `element` is set when the
/// multiplier lies in A itself (finite carriers).
struct Multiplier {
  std::function<FinSupp(const FinSupp&)> left;   // m·x
  std::function<FinSupp(const FinSupp&)> right;  // x·m
  std::optional<FinSupp> element;
};

Multiplier unit_multiplier();

struct LinearMap {
  std::function<FinSupp(const FinSupp&)> fwd;
  std::function<FinSupp(const FinSupp&)> inv;
};

LinearMap identity_map();

struct ModularData {
  Multiplier delta;      // (φ⊗id)Δ(a) = φ(a)δ
  Multiplier delta_inv;  // = S(δ)
  Scalar tau;            // φ∘S² = τφ
  LinearMap sigma;       // φ(ab) = φ(bσ(a))
  LinearMap sigma_prime; // = S⁻¹∘σ⁻¹∘S
  bool delta_is_unit = false;
};

/// δ through T-map pairings with cross-checks over every probe element
/// (NotIntegral on disagreement), τ checked across all probes
/// (InconsistentTau on disagreement), σ by Gram solve on finite carriers
/// and by the commutative identity on function algebras.
ModularData modular_data(const MhcAlgebra& a, const Integral& phi,
                         const std::vector<Elem>* sample = nullptr);

/// Prop 3.5 (S(δ) = δ⁻¹, ε(δ) = 1, φS(a) = φ(aδ)), Prop 3.6 (defining
/// equations, invariance, homomorphism) and the five Prop 3.7 claims, plus
/// φ(δ⁻¹aδ) = τφ(a) and the reconstruction a = (id⊗φ)(Δ(a)(1⊗ξ/φ(ξ))).
AxiomReport verify_modular_properties(const MhcAlgebra& a, const ModularData& md,
                                      const Integral& phi, const Integral& psi,
                                      const FinSupp* xi,
                                      const std::vector<Elem>* sample = nullptr);

}  // namespace qhopf
