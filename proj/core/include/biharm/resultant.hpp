#ifndef BIHARM_RESULTANT_HPP
#define BIHARM_RESULTANT_HPP

#include <vector>

#include "biharm/poly_div.hpp"

namespace biharm {

namespace detail {

// Subresultant PRS resultant (Ducos/Collins style bookkeeping).  Inputs may
// have any degrees >= 0; returns the resultant with the Sylvester
// determinant sign convention.
template <class F>
MultiPoly<F> resultant_prs_any(MultiPoly<F> A, MultiPoly<F> B, std::size_t var) {
  const VarTablePtr& table = A.table();
  auto one = [&] { return MultiPoly<F>::constant(table, F(1)); };
  if (A.is_zero() || B.is_zero()) return MultiPoly<F>::zero(table);
  int m = A.degree(var), n = B.degree(var);
  bool negate = false;
  if (m < n) {
    std::swap(A, B);
    std::swap(m, n);
    negate = (m % 2 == 1) && (n % 2 == 1);
  }
  if (n == 0) {
    // Res(A, const) = const^deg(A)
    MultiPoly<F> r = B.pow(static_cast<uint32_t>(m));
    return negate ? -r : r;
  }
  MultiPoly<F> g = one(), h = one();
  bool sign_neg = negate;
  for (;;) {
    m = A.degree(var);
    n = B.degree(var);
    int delta = m - n;
    if ((m % 2 == 1) && (n % 2 == 1)) sign_neg = !sign_neg;
    MultiPoly<F> R = pseudo_remainder(A, B, var);
    A = B;
    // B <- R / (g * h^delta), an exact division by subresultant theory
    MultiPoly<F> divisor = g * h.pow(static_cast<uint32_t>(delta));
    B = R.is_zero() ? R : exact_divide(R, divisor);
    g = leading_coeff_in_var(A, var);
    if (delta > 0) {
      // h <- g^delta / h^(delta-1)
      MultiPoly<F> num = g.pow(static_cast<uint32_t>(delta));
      h = delta == 1 ? num : exact_divide(num, h.pow(static_cast<uint32_t>(delta - 1)));
    }
    if (B.is_zero()) return MultiPoly<F>::zero(table);
    if (B.degree(var) == 0) {
      int dA = A.degree(var);
      // res = B^dA / h^(dA-1), exact
      MultiPoly<F> num = B.pow(static_cast<uint32_t>(dA));
      MultiPoly<F> res =
          dA <= 1 ? num : exact_divide(num, h.pow(static_cast<uint32_t>(dA - 1)));
      return sign_neg ? -res : res;
    }
  }
}

}  // namespace detail

// Resultant of p and q with respect to var via the subresultant PRS.
// Preconditions per the engine contract: both inputs have positive degree
// in var.
template <class F>
MultiPoly<F> resultant(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var) {
  p.check_same_table(q);
  if (p.degree(var) < 1 || q.degree(var) < 1)
    throw UsageError("resultant: inputs must have positive degree in the variable");
  return detail::resultant_prs_any(p, q, var);
}

template <class F>
MultiPoly<F> resultant(const MultiPoly<F>& p, const MultiPoly<F>& q,
                       const std::string& var) {
  return resultant(p, q, p.table()->index_of(var));
}

// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
// Entries are consumed; row swaps tracked in the sign.
template <class F>
MultiPoly<F> bareiss_determinant(std::vector<std::vector<MultiPoly<F>>> M,
                                 const VarTablePtr& table) {
  std::size_t n = M.size();
  if (n == 0) return MultiPoly<F>::constant(table, F(1));
  bool neg = false;
  MultiPoly<F> prev = MultiPoly<F>::constant(table, F(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && M[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly<F>::zero(table);
      std::swap(M[k], M[r]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly<F> t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = t.is_zero() ? t : exact_divide(t, prev);
      }
      M[i][k] = MultiPoly<F>::zero(table);
    }
    prev = M[k][k];
  }
  return neg ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

// Resultant via the Sylvester matrix and Bareiss elimination; the
// independent cross-check route for the PRS implementation.
template <class F>
MultiPoly<F> sylvester_resultant(const MultiPoly<F>& p, const MultiPoly<F>& q,
                                 std::size_t var) {
  p.check_same_table(q);
  const VarTablePtr& table = p.table();
  int m = p.degree(var), n = q.degree(var);
  if (m < 0 || n < 0) return MultiPoly<F>::zero(table);
  if (m == 0 && n == 0) return MultiPoly<F>::constant(table, F(1));
  auto pc = coeffs_in_var(p, var);
  auto qc = coeffs_in_var(q, var);
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly<F>>> M(
      size, std::vector<MultiPoly<F>>(size, MultiPoly<F>::zero(table)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) M[row][row + m - k] = pc[static_cast<std::size_t>(k)];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      M[static_cast<std::size_t>(n + row)][row + n - k] = qc[static_cast<std::size_t>(k)];
  return bareiss_determinant(std::move(M), table);
}

template <class F>
MultiPoly<F> sylvester_resultant(const MultiPoly<F>& p, const MultiPoly<F>& q,
                                 const std::string& var) {
  return sylvester_resultant(p, q, p.table()->index_of(var));
}

}  // namespace biharm

#endif
