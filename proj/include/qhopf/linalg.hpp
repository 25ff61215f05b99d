#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transposed() const;
  Vec apply(const Vec& x) const;       // m·x
  Vec apply_transpose(const Vec& x) const;  // mᵀ·x  (covector through m)
  Matrix mul(const Matrix& other) const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Rank-3 tensor of structure constants, flat index i·d2·d3 + j·d3 + k.
class Tensor3 {
 public:
  Tensor3() : d1_(0), d2_(0), d3_(0) {}
  Tensor3(int d1, int d2, int d3)
      : d1_(d1), d2_(d2), d3_(d3), a_(static_cast<size_t>(d1) * d2 * d3) {}

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  int d3() const { return d3_; }

  Scalar& at(int i, int j, int k) { return a_[idx(i, j, k)]; }
  const Scalar& at(int i, int j, int k) const { return a_[idx(i, j, k)]; }

  bool operator==(const Tensor3& o) const {
    return d1_ == o.d1_ && d2_ == o.d2_ && d3_ == o.d3_ && a_ == o.a_;
  }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * d2_ + j) * d3_ + k;
  }
  int d1_, d2_, d3_;
  std::vector<Scalar> a_;
};

/// Basis of the right null space { v : m·v = 0 }. Deterministic: reduced
/// row echelon form with first-nonzero pivoting, one basis vector per free
/// column with that free variable set to 1.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with m·x = b, or nullopt when inconsistent. Free variables are
/// set to zero (reduced-row-echelon convention), so the result is unique.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Exact rank via fraction-free (Bareiss) elimination on a denominator-
/// cleared integer copy.
int rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

Scalar dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);

}  // namespace qhopf
