#ifndef G3TRR_RATIONAL_HPP
#define G3TRR_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "g3trr/errors.hpp"

namespace g3trr {

// Exact rational number, always in lowest terms with positive denominator.
// Thin value wrapper around GMP's mpq_class; every arithmetic operation is
// exact and division by zero throws.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  // Parses "p/q" or "p"; throws ParseError on malformed input or zero
  // denominator.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  // Serializes as "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  // Combined bit length of numerator and denominator; used as a pivot-size
  // heuristic in elimination.
  size_t bit_size() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace g3trr

#endif
