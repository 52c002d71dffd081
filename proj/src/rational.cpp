#include "g3trr/rational.hpp"

#include <ostream>

namespace g3trr {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (sgn(q_.get_den()) == 0) throw DivisionByZero();
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  mpz_class num, den(1);
  try {
    if (slash == std::string::npos) {
      num = mpz_class(text);
    } else {
      num = mpz_class(text.substr(0, slash));
      den = mpz_class(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'");
  }
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

size_t Rational::bit_size() const {
  return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace g3trr
