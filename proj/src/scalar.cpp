#include "qhopf/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace qhopf {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Scalar(mpq_class(mpz_class(s)));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::domain_error("Scalar: cannot parse '" + s + "'");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  return Scalar(mpq_class(1) / v_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace qhopf
