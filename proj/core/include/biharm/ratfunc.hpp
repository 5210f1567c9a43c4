#ifndef BIHARM_RATFUNC_HPP
#define BIHARM_RATFUNC_HPP

#include <string>
#include <utility>

#include "biharm/multipoly.hpp"
#include "biharm/poly_io.hpp"

namespace biharm {

// Per-field normalization for numerator/denominator pairs.  Full
// multivariate GCD reduction is deliberately not attempted: identities are
// decided by cross-multiplication, which tolerates unreduced
// representatives.  Only scalar content and common monomial factors are
// stripped.
template <class F>
struct PairNormalize;

template <>
struct PairNormalize<Rational> {
  // Joint integer-content strip; denominator leading coefficient positive.
  static void run(Poly& num, Poly& den) {
    Rational c = rational_content(den);
    if (!num.is_zero()) {
      Rational cn = rational_content(num);
      c = Rational(int_gcd(cn.num(), c.num()), int_lcm(cn.den(), c.den()));
    }
    if (den.leading_coeff().sign() < 0) c = -c;
    Rational inv = c.inv();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
};

template <>
struct PairNormalize<QuadExt> {
  // No order on Q(sqrt(d)); normalize the denominator leading coefficient
  // to one instead.
  static void run(MultiPoly<QuadExt>& num, MultiPoly<QuadExt>& den) {
    QuadExt inv = den.leading_coeff().inv();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
};

// Quotient of two polynomials over the same table.  The denominator is
// nonzero; the pair is kept normalized (common monomial factor stripped,
// scalar normalization per PairNormalize).  Zero is canonically 0/1.
template <class F>
class RatFunc {
 public:
  RatFunc() = default;

  explicit RatFunc(MultiPoly<F> num)
      : num_(std::move(num)),
        den_(MultiPoly<F>::constant(num_.table(), F(1))) {}

  RatFunc(MultiPoly<F> num, MultiPoly<F> den)
      : num_(std::move(num)), den_(std::move(den)) {
    num_.check_same_table(den_);
    if (den_.is_zero()) throw UsageError("RatFunc: zero denominator");
    normalize();
  }

  static RatFunc constant(VarTablePtr table, F value) {
    return RatFunc(MultiPoly<F>::constant(std::move(table), std::move(value)));
  }
  static RatFunc variable(VarTablePtr table, const std::string& name) {
    return RatFunc(MultiPoly<F>::variable(std::move(table), name));
  }

  const MultiPoly<F>& num() const { return num_; }
  const MultiPoly<F>& den() const { return den_; }
  const VarTablePtr& table() const { return num_.table(); }

  bool is_zero() const { return num_.is_zero(); }

  bool is_polynomial() const { return den_.is_constant(); }

  // The numerator scaled by the constant denominator; denominator must be
  // constant.
  MultiPoly<F> as_polynomial() const {
    if (!is_polynomial()) throw UsageError("RatFunc: not a polynomial");
    return num_.scaled(den_.constant_value().inv());
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, already_normal{}); }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (y.is_zero()) throw UsageError("RatFunc: division by zero");
    return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
  }

  RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
  RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
  RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }
  RatFunc& operator/=(const RatFunc& y) { return *this = *this / y; }

  // Exact equality of values, decided by cross-multiplication.
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  std::string to_string() const {
    if (is_polynomial()) return format_polynomial(as_polynomial());
    return "(" + format_polynomial(num_) + ") / (" + format_polynomial(den_) + ")";
  }

 private:
  struct already_normal {};
  RatFunc(MultiPoly<F> num, MultiPoly<F> den, already_normal)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly<F>::constant(num_.table(), F(1));
      return;
    }
    Monomial mn = monomial_content(num_), md = monomial_content(den_);
    std::vector<uint32_t> mins(mn.nvars());
    for (std::size_t i = 0; i < mins.size(); ++i)
      mins[i] = std::min(mn.exp(i), md.exp(i));
    Monomial strip(std::move(mins));
    if (!strip.is_constant()) {
      num_ = divide_monomial(num_, strip);
      den_ = divide_monomial(den_, strip);
    }
    PairNormalize<F>::run(num_, den_);
  }

  MultiPoly<F> num_, den_;
};

using RatQ = RatFunc<Rational>;
using RatQE = RatFunc<QuadExt>;

// Exact substitution var := value into a polynomial, by Horner in var.
// The result's denominator is value.den()^deg_var(p) before normalization.
template <class F>
RatFunc<F> substitute(const MultiPoly<F>& p, std::size_t var, const RatFunc<F>& value) {
  p.check_same_table(value.num());
  int d = p.degree(var);
  if (d <= 0) return RatFunc<F>(p);
  RatFunc<F> acc(p.coeff_of_power(var, static_cast<uint32_t>(d)));
  for (int k = d - 1; k >= 0; --k)
    acc = acc * value + RatFunc<F>(p.coeff_of_power(var, static_cast<uint32_t>(k)));
  return acc;
}

template <class F>
RatFunc<F> substitute(const MultiPoly<F>& p, const std::string& var,
                      const RatFunc<F>& value) {
  return substitute(p, p.table()->index_of(var), value);
}

// (numerator, denominator) of the normalized quotient.
template <class F>
std::pair<MultiPoly<F>, MultiPoly<F>> clear_denominators(const RatFunc<F>& r) {
  return {r.num(), r.den()};
}

}  // namespace biharm

#endif
