#pragma once

#include <string>
#include <vector>

#include "qhopf/linalg.hpp"

namespace qhopf {

/// Basis-indexed structure constants of a finite-dimensional (co)algebra
/// with antipode. Conventions:
///   e_i·e_j   = Σ_k mult(i,j,k) e_k
///   Δ(e_k)    = Σ_{i,j} comult(k,i,j) e_i⊗e_j
///   S(e_j)    = Σ_i antipode(i,j) e_i        (columns are images)
struct StructureTensors {
  std::vector<std::string> basis;
  Tensor3 mult;
  Vec unit;
  Tensor3 comult;
  Vec counit;
  Matrix antipode;

  int dim() const { return static_cast<int>(basis.size()); }

  Vec product(const Vec& x, const Vec& y) const;
  Vec product_basis(int i, int j) const;
  /// Coefficient matrix c with Δ(x) = Σ_{ij} c(i,j) e_i⊗e_j.
  Matrix coproduct(const Vec& x) const;
  Scalar counit_of(const Vec& x) const { return dot(counit, x); }
  Vec apply_antipode(const Vec& x) const { return antipode.apply(x); }

  Vec basis_vec(int i) const;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<long long> where;  // witness basis indices / labels
  std::string lhs, rhs;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::vector<std::pair<std::string, std::string>> probes;  // informational, not axioms
  long checks_run = 0;
  bool sampled = false;

  bool pass() const { return violations.empty(); }
  void add(const std::string& axiom, std::vector<long long> where, std::string lhs, std::string rhs);
  void merge(const AxiomReport& other);
  std::string summary() const;
};

}  // namespace qhopf
