#ifndef BIHARM_GCD_HPP
#define BIHARM_GCD_HPP

#include "biharm/poly_div.hpp"

namespace biharm {

// Normalizes a PRS element: strips rational content and any common
// monomial factor, and makes the grlex-leading coefficient positive.
// Coefficient-polynomial content (in variables other than the main one) is
// not removed; callers that need a canonical gcd over the fraction field
// treat the result as defined up to such units.
inline Poly gcd_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Poly r = divide_monomial(p, monomial_content(p));
  r = integer_primitive(r);
  if (r.leading_coeff().sign() < 0) r = -r;
  return r;
}

// GCD of p and q viewed as univariate polynomials in var over the field of
// fractions of the remaining variables, computed by a pseudo-remainder
// sequence.  Result is normalized by gcd_normalize; a unit gcd is returned
// as the constant 1.
inline Poly univariate_gcd(const Poly& p, const Poly& q, std::size_t var) {
  if (p.is_zero() && q.is_zero())
    throw UsageError("univariate_gcd: both inputs zero");
  if (p.is_zero()) return gcd_normalize(q);
  if (q.is_zero()) return gcd_normalize(p);
  Poly a = gcd_normalize(p), b = gcd_normalize(q);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree(var) == 0) return Poly::constant(p.table(), Rational(1));
    Poly r = pseudo_remainder(a, b, var);
    a = b;
    b = gcd_normalize(r);
  }
  return gcd_normalize(a);
}

inline Poly univariate_gcd(const Poly& p, const Poly& q, const std::string& var) {
  return univariate_gcd(p, q, p.table()->index_of(var));
}

// Squarefree part of a univariate-in-var polynomial: p / gcd(p, p').
inline Poly squarefree_part(const Poly& p, std::size_t var) {
  if (p.is_zero()) throw UsageError("squarefree_part: zero polynomial");
  if (p.degree(var) == 0) return gcd_normalize(p);
  Poly g = univariate_gcd(p, p.differentiate(var), var);
  if (g.degree(var) <= 0) return gcd_normalize(p);
  // division is exact up to content; scale p by the gcd's leading power
  Poly scaled = p;
  auto q = try_exact_divide(scaled, g);
  if (!q) {
    // content mismatch: divide in the fraction field via pseudo-division
    int e = p.degree(var) - g.degree(var) + 1;
    Poly lead = leading_coeff_in_var(g, var);
    for (int i = 0; i < e; ++i) scaled = scaled * lead;
    q = try_exact_divide(scaled, g);
    if (!q) throw UsageError("squarefree_part: inexact gcd division");
  }
  return gcd_normalize(*q);
}

}  // namespace biharm

#endif
