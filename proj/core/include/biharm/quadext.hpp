#ifndef BIHARM_QUADEXT_HPP
#define BIHARM_QUADEXT_HPP

#include <iosfwd>
#include <string>

#include "biharm/rational.hpp"

namespace biharm {

// Element a + b*sqrt(d) of a real quadratic extension Q(sqrt(d)), d >= 0
// rational and fixed per arithmetic context.  Representation is canonical:
// if d is a perfect rational square the constructor collapses the value to
// a plain rational (b = 0, d = 0), and any value with b = 0 stores d = 0.
// Two values are equal iff their components are equal, and mixing distinct
// nonzero discriminants is a usage error.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(long n) : a_(n), b_(0), d_(0) {}  // NOLINT: implicit by design
  QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT

  QuadExt(Rational a, Rational b, Rational d);

  // sqrt(d) as an element of Q(sqrt(d)).
  static QuadExt radical(const Rational& d) { return QuadExt(0, 1, d); }

  const Rational& base() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  const Rational& discriminant() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.is_one(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

  // Field norm a^2 - d*b^2; zero only for the zero element since d is
  // never a perfect square in stored form.
  Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Rational d = common_discriminant(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    Rational d = common_discriminant(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Rational d = common_discriminant(x, y);
    return QuadExt(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    return x * y.inv();
  }

  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  QuadExt inv() const;
  QuadExt pow(unsigned long e) const;

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) {
    return !(x == y);
  }

  // "p/q", "r*sqrt(d)" or "p/q + r*sqrt(d)" (with "- |r|*sqrt(d)" for
  // negative radical parts); round-trips through parse.
  std::string to_string() const;
  static QuadExt from_string(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

 private:
  static Rational common_discriminant(const QuadExt& x, const QuadExt& y);

  Rational a_, b_, d_;
};

}  // namespace biharm

#endif
