#ifndef BIHARM_RATIONAL_HPP
#define BIHARM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "biharm/errors.hpp"

namespace biharm {

// Arbitrary-precision rational in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero represented as 0/1.
// Canonicity is maintained by every operation, so equality is
// component-wise.  Values are immutable in spirit: all operators
// return fresh values and nothing exposes mutable internals.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                 // NOLINT: implicit by design
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  Rational(long n, long d) {
    if (d == 0) throw UsageError("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw UsageError("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Parses "p" or "p/q" with optional leading sign, no whitespace.
  static Rational from_string(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ + y.v_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ - y.v_));
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.v_ * y.v_));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw UsageError("Rational: division by zero");
    return Rational(mpq_class(x.v_ / y.v_));
  }

  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  Rational inv() const {
    if (is_zero()) throw UsageError("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r);  // canonical since v_ is
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.v_ == y.v_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) {
    return x.v_ != y.v_;
  }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.v_ < y.v_;
  }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return x.v_ <= y.v_;
  }
  friend bool operator>(const Rational& x, const Rational& y) {
    return x.v_ > y.v_;
  }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return x.v_ >= y.v_;
  }

  // Decimal-free form "p/q"; plain "p" when the denominator is 1.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class v_;
};

// gcd of |a|, |b| as nonnegative integers; gcd(0, 0) = 0.
mpz_class int_gcd(const mpz_class& a, const mpz_class& b);
mpz_class int_lcm(const mpz_class& a, const mpz_class& b);

// Exact integer square root if n is a perfect square.
bool perfect_square_root(const mpz_class& n, mpz_class& root);

// Exact rational square root if q = (a/b)^2 for a rational a/b >= 0.
bool perfect_square_root(const Rational& q, Rational& root);

}  // namespace biharm

#endif
