#include "qhopf/linalg.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace qhopf {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  a_.resize(static_cast<size_t>(rows_) * cols_);
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("Matrix: ragged rows");
    int j = 0;
    for (long v : r) at(i, j++) = Scalar(v);
    ++i;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  Vec y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar acc;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) acc += at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Vec Matrix::apply_transpose(const Vec& x) const {
  if (static_cast<int>(x.size()) != rows_) throw std::invalid_argument("Matrix::apply_transpose: size mismatch");
  Vec y(cols_);
  for (int j = 0; j < cols_; ++j) {
    Scalar acc;
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero() && !x[i].is_zero()) acc += at(i, j) * x[i];
    y[j] = acc;
  }
  return y;
}

Matrix Matrix::mul(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix::mul: size mismatch");
  Matrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j)
        if (!other.at(k, j).is_zero()) r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

namespace {

// In-place RREF with first-nonzero-in-column pivoting. Returns pivot
// columns in order.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Scalar(1);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -r.at(static_cast<int>(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // row (0...0 | 1)
  Vec x(m.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(static_cast<int>(pr), m.cols());
  return x;
}

int rank(const Matrix& m) {
  // Clear denominators row by row (row scaling preserves rank), then run
  // Bareiss fraction-free elimination over the integers.
  int nr = m.rows(), nc = m.cols();
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (int i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < nc; ++j) {
      mpz_class den(m.at(i, j).denominator_str());
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
      l = l / g * den;
    }
    for (int j = 0; j < nc; ++j) {
      mpz_class num(m.at(i, j).numerator_str());
      mpz_class den(m.at(i, j).denominator_str());
      a[i][j] = num * (l / den);
    }
  }

  int rk = 0;
  mpz_class prev = 1;
  for (int col = 0; col < nc && rk < nr; ++col) {
    int p = -1;
    for (int i = rk; i < nr; ++i) {
      if (a[i][col] != 0) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != rk) std::swap(a[p], a[rk]);
    for (int i = rk + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        mpz_class t = a[i][j] * a[rk][col] - a[i][col] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Scalar acc;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  os << ")";
  return os.str();
}

}  // namespace qhopf
