#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qhopf {

/// Exact rational number. Always held in lowest terms with positive
/// denominator, so operator== is exact structural equality.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}
  Scalar(int n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Scalar parse(std::string_view text);  // "p", "-p", "p/q"

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Scalar inverse() const;  // throws std::domain_error on zero

  std::string str() const;
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.v_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class v_;
};

}  // namespace qhopf
