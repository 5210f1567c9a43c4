#ifndef BIHARM_MULTIPOLY_HPP
#define BIHARM_MULTIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "biharm/monomial.hpp"
#include "biharm/quadext.hpp"
#include "biharm/rational.hpp"
#include "biharm/var_table.hpp"

namespace biharm {

// Sparse multivariate polynomial over an exact field F (Rational or
// QuadExt).  Terms are kept in a map ordered grlex-descending, so the
// leading term is first and iteration order is canonical; no zero
// coefficient is ever stored.
template <class F>
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, F, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(VarTablePtr table) : table_(std::move(table)) {}

  static MultiPoly zero(VarTablePtr table) { return MultiPoly(std::move(table)); }

  static MultiPoly constant(VarTablePtr table, F value) {
    MultiPoly p(std::move(table));
    p.add_term(Monomial(p.table_->size()), std::move(value));
    return p;
  }

  static MultiPoly variable(VarTablePtr table, const std::string& name) {
    std::size_t idx = table->index_of(name);
    MultiPoly p(std::move(table));
    p.add_term(Monomial::unit(p.table_->size(), idx), F(1));
    return p;
  }

  static MultiPoly term(VarTablePtr table, Monomial m, F coeff) {
    MultiPoly p(std::move(table));
    p.add_term(std::move(m), std::move(coeff));
    return p;
  }

  const VarTablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }

  F constant_value() const {
    if (terms_.empty()) return F(0);
    if (!is_constant()) throw UsageError("MultiPoly: not a constant");
    return terms_.begin()->second;
  }

  // grlex-leading data; polynomial must be nonzero.
  const Monomial& leading_monomial() const {
    if (is_zero()) throw UsageError("MultiPoly: leading term of zero");
    return terms_.begin()->first;
  }
  const F& leading_coeff() const {
    if (is_zero()) throw UsageError("MultiPoly: leading term of zero");
    return terms_.begin()->second;
  }

  F coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(Monomial m, F coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, static_cast<int>(m.exp(var)));
    return d;  // -1 for the zero polynomial
  }

  int degree(const std::string& var) const { return degree(table_->index_of(var)); }

  int total_degree() const {
    return is_zero() ? -1 : static_cast<int>(terms_.begin()->first.total_degree());
  }

  // Coefficient of var^k as a polynomial over the same table (var removed
  // from the exponent vector, i.e. set to 0).
  MultiPoly coeff_of_power(std::size_t var, uint32_t k) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      if (m.exp(var) != k) continue;
      std::vector<uint32_t> e = m.exps();
      e[var] = 0;
      r.add_term(Monomial(std::move(e)), c);
    }
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    p.check_same_table(q);
    MultiPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    p.check_same_table(q);
    MultiPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.check_same_table(q);
    MultiPoly r(p.table_);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
  MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  MultiPoly scaled(const F& s) const {
    MultiPoly r(table_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  MultiPoly mul_monomial(const Monomial& mono, const F& s) const {
    MultiPoly r(table_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c * s);
    return r;
  }

  MultiPoly pow(uint32_t e) const {
    MultiPoly base = *this;
    MultiPoly r = constant(table_, F(1));
    while (e > 0) {
      if (e & 1) r *= base;
      if (e >>= 1) base *= base;
    }
    return r;
  }

  // Formal partial derivative.
  MultiPoly differentiate(std::size_t var) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      uint32_t e = m.exp(var);
      if (e == 0) continue;
      std::vector<uint32_t> exps = m.exps();
      exps[var] -= 1;
      r.add_term(Monomial(std::move(exps)), c * F(static_cast<long>(e)));
    }
    return r;
  }

  MultiPoly differentiate(const std::string& var) const {
    return differentiate(table_->index_of(var));
  }

  // Substitute a constant for one variable.
  MultiPoly eval_partial(std::size_t var, const F& value) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      uint32_t e = m.exp(var);
      std::vector<uint32_t> exps = m.exps();
      exps[var] = 0;
      F scaled_coeff = c;
      if (e > 0) {
        F v = value;
        F acc(1);
        uint32_t k = e;
        while (k > 0) {
          if (k & 1) acc *= v;
          if (k >>= 1) v *= v;
        }
        scaled_coeff = c * acc;
      }
      r.add_term(Monomial(std::move(exps)), std::move(scaled_coeff));
    }
    return r;
  }

  // Substitute a polynomial (over the same table) for one variable.
  MultiPoly substitute_poly(std::size_t var, const MultiPoly& value) const {
    check_same_table(value);
    int d = degree(var);
    if (d <= 0) return *this;
    // Horner on descending powers of var
    MultiPoly acc = coeff_of_power(var, static_cast<uint32_t>(d));
    for (int k = d - 1; k >= 0; --k)
      acc = acc * value + coeff_of_power(var, static_cast<uint32_t>(k));
    return acc;
  }

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
    return same_table(p.table_, q.table_) && p.terms_ == q.terms_;
  }
  friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

  void check_same_table(const MultiPoly& q) const {
    if (!same_table(table_, q.table_))
      throw UsageError("MultiPoly: variable table mismatch");
  }

 private:
  VarTablePtr table_;
  TermMap terms_;
};

using Poly = MultiPoly<Rational>;
using PolyQE = MultiPoly<QuadExt>;

// Positive rational r such that p/r has coprime integer coefficients;
// returns 1 for the zero polynomial.
inline Rational rational_content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    num_gcd = int_gcd(num_gcd, c.num());
    den_lcm = int_lcm(den_lcm, c.den());
  }
  return Rational(num_gcd, den_lcm);
}

// Strips rational content; the result has coprime integer coefficients and
// the same leading-coefficient sign as p.
inline Poly integer_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(rational_content(p).inv());
}

// Componentwise-minimum monomial dividing every term of p.
template <class F>
Monomial monomial_content(const MultiPoly<F>& p) {
  if (p.is_zero()) return Monomial(p.table()->size());
  std::vector<uint32_t> mins(p.table()->size(), UINT32_MAX);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < mins.size(); ++i)
      mins[i] = std::min(mins[i], m.exp(i));
  return Monomial(std::move(mins));
}

template <class F>
MultiPoly<F> divide_monomial(const MultiPoly<F>& p, const Monomial& mono) {
  MultiPoly<F> r(p.table());
  for (const auto& [m, c] : p.terms()) r.add_term(m / mono, c);
  return r;
}

// True when var is the only variable appearing with positive exponent.
template <class F>
bool is_univariate_in(const MultiPoly<F>& p, std::size_t var) {
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (i != var && m.exp(i) != 0) return false;
  return true;
}

}  // namespace biharm

#endif
