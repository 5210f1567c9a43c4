#ifndef BIHARM_POLY_DIV_HPP
#define BIHARM_POLY_DIV_HPP

#include <optional>
#include <vector>

#include "biharm/multipoly.hpp"

namespace biharm {

// Coefficients of p viewed as a univariate polynomial in var; index k holds
// the coefficient of var^k (a polynomial in the remaining variables).
// Size is deg_var(p) + 1; empty for the zero polynomial.
template <class F>
std::vector<MultiPoly<F>> coeffs_in_var(const MultiPoly<F>& p, std::size_t var) {
  int d = p.degree(var);
  if (d < 0) return {};
  std::vector<MultiPoly<F>> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    out.push_back(p.coeff_of_power(var, static_cast<uint32_t>(k)));
  return out;
}

template <class F>
MultiPoly<F> from_coeffs_in_var(const VarTablePtr& table, std::size_t var,
                                const std::vector<MultiPoly<F>>& coeffs) {
  MultiPoly<F> r(table);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial shift = Monomial::unit(table->size(), var, static_cast<uint32_t>(k));
    for (const auto& [m, c] : coeffs[k].terms()) r.add_term(m * shift, c);
  }
  return r;
}

template <class F>
MultiPoly<F> leading_coeff_in_var(const MultiPoly<F>& p, std::size_t var) {
  int d = p.degree(var);
  if (d < 0) return MultiPoly<F>::zero(p.table());
  return p.coeff_of_power(var, static_cast<uint32_t>(d));
}

// Pseudo-remainder with the textbook scaling: for deg_var A >= deg_var B,
//   lc(B)^(deg A - deg B + 1) * A  =  Q * B + R,   deg_var R < deg_var B.
template <class F>
MultiPoly<F> pseudo_remainder(const MultiPoly<F>& A, const MultiPoly<F>& B,
                              std::size_t var) {
  int m = A.degree(var), n = B.degree(var);
  if (n < 0) throw UsageError("pseudo_remainder: zero divisor");
  if (m < n) {
    // scale by lc(B)^(m-n+1) is not defined for m < n; by convention return
    // lc-scaled A only when degrees permit — callers maintain m >= n.
    throw UsageError("pseudo_remainder: deg A < deg B");
  }
  MultiPoly<F> lcB = leading_coeff_in_var(B, var);
  MultiPoly<F> R = A;
  int e = m - n + 1;
  while (!R.is_zero() && R.degree(var) >= n) {
    int d = R.degree(var);
    MultiPoly<F> lcR = leading_coeff_in_var(R, var);
    Monomial shift = Monomial::unit(A.table()->size(), var, static_cast<uint32_t>(d - n));
    // R <- lcB*R - lcR*x^(d-n)*B
    R = R * lcB - (lcR * B).mul_monomial(shift, F(1));
    --e;
  }
  for (; e > 0; --e) R = R * lcB;
  return R;
}

// Exact multivariate division: returns p / d when d divides p, nullopt
// otherwise.  Greedy leading-term elimination under grlex.
template <class F>
std::optional<MultiPoly<F>> try_exact_divide(const MultiPoly<F>& p,
                                             const MultiPoly<F>& d) {
  p.check_same_table(d);
  if (d.is_zero()) throw UsageError("exact division by zero");
  MultiPoly<F> q(p.table());
  MultiPoly<F> r = p;
  const Monomial& ltd = d.leading_monomial();
  const F& lcd = d.leading_coeff();
  while (!r.is_zero()) {
    const Monomial& ltr = r.leading_monomial();
    if (!ltd.divides(ltr)) return std::nullopt;
    Monomial mq = ltr / ltd;
    F cq = r.leading_coeff() * lcd.inv();
    q.add_term(mq, cq);
    r -= d.mul_monomial(mq, cq);
  }
  return q;
}

template <class F>
MultiPoly<F> exact_divide(const MultiPoly<F>& p, const MultiPoly<F>& d) {
  auto q = try_exact_divide(p, d);
  if (!q) throw UsageError("exact_divide: not divisible");
  return *q;
}

}  // namespace biharm

#endif
