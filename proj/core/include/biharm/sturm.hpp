#ifndef BIHARM_STURM_HPP
#define BIHARM_STURM_HPP

#include <string>
#include <vector>

#include "biharm/gcd.hpp"

namespace biharm {

// Endpoint of a root-counting interval: finite rational or +/-infinity.
struct ExtendedRational {
  enum Kind { NegInf, Finite, PosInf };
  Kind kind = Finite;
  Rational value;

  static ExtendedRational neg_inf() { return {NegInf, Rational(0)}; }
  static ExtendedRational pos_inf() { return {PosInf, Rational(0)}; }
  static ExtendedRational finite(Rational v) { return {Finite, std::move(v)}; }

  // "-inf", "inf", "+inf", or a rational "p/q".
  static ExtendedRational from_string(const std::string& s) {
    if (s == "-inf") return neg_inf();
    if (s == "inf" || s == "+inf") return pos_inf();
    return finite(Rational::from_string(s));
  }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind == NegInf) return b.kind != NegInf;
    if (a.kind == PosInf) return false;
    if (b.kind == PosInf) return true;
    if (b.kind == NegInf) return false;
    return a.value < b.value;
  }

  std::string to_string() const {
    if (kind == NegInf) return "-inf";
    if (kind == PosInf) return "inf";
    return value.to_string();
  }
};

// Signed-remainder chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i);
// the last nonzero entry is gcd(p, p') up to sign.
struct SturmChain {
  std::vector<Poly> entries;
  std::size_t var = 0;
};

namespace detail {

// rational-coefficient univariate remainder
inline Poly uni_rem(const Poly& a, const Poly& b, std::size_t var) {
  Poly r = a;
  int n = b.degree(var);
  Poly lcB = leading_coeff_in_var(b, var);
  Rational inv = lcB.constant_value().inv();
  while (!r.is_zero() && r.degree(var) >= n) {
    int d = r.degree(var);
    Rational c = leading_coeff_in_var(r, var).constant_value() * inv;
    Monomial shift = Monomial::unit(r.table()->size(), var, static_cast<uint32_t>(d - n));
    r -= b.mul_monomial(shift, c);
  }
  return r;
}

inline int sign_at(const Poly& p, std::size_t var, const ExtendedRational& x) {
  if (p.is_zero()) return 0;
  switch (x.kind) {
    case ExtendedRational::Finite:
      return p.eval_partial(var, x.value).constant_value().sign();
    case ExtendedRational::PosInf:
      return leading_coeff_in_var(p, var).constant_value().sign();
    case ExtendedRational::NegInf: {
      int s = leading_coeff_in_var(p, var).constant_value().sign();
      return (p.degree(var) % 2 == 0) ? s : -s;
    }
  }
  return 0;
}

// Sign variations of the chain just to the right of x.  If the primary
// polynomial vanishes at x its sign is taken from the next chain entry
// (the derivative direction); other zeros are dropped, which is exact for
// a squarefree Sturm chain.
inline int variations_right_of(const SturmChain& chain, const ExtendedRational& x) {
  std::vector<int> signs;
  for (std::size_t i = 0; i < chain.entries.size(); ++i) {
    int s = sign_at(chain.entries[i], chain.var, x);
    if (i == 0 && s == 0 && chain.entries.size() > 1)
      s = sign_at(chain.entries[1], chain.var, x);
    if (s != 0) signs.push_back(s);
  }
  int v = 0;
  for (std::size_t i = 1; i < signs.size(); ++i)
    if (signs[i] != signs[i - 1]) ++v;
  return v;
}

}  // namespace detail

inline SturmChain build_sturm_chain(const Poly& p, std::size_t var) {
  if (p.is_zero()) throw UsageError("sturm: zero polynomial");
  if (!is_univariate_in(p, var))
    throw UsageError("sturm: polynomial is not univariate in the chosen variable");
  SturmChain chain;
  chain.var = var;
  chain.entries.push_back(p);
  Poly d = p.differentiate(var);
  if (d.is_zero()) return chain;
  chain.entries.push_back(d);
  for (;;) {
    const Poly& a = chain.entries[chain.entries.size() - 2];
    const Poly& b = chain.entries.back();
    if (b.degree(var) <= 0) break;
    Poly r = detail::uni_rem(a, b, var);
    if (r.is_zero()) break;
    chain.entries.push_back(-r);
  }
  return chain;
}

// Number of distinct real roots of p in (lo, hi]; the squarefree part is
// taken first, so multiplicities do not matter.
inline int sturm_count(const Poly& p, std::size_t var, const ExtendedRational& lo,
                       const ExtendedRational& hi) {
  if (p.is_zero()) throw UsageError("sturm_count: zero polynomial");
  if (!(lo < hi)) throw UsageError("sturm_count: empty interval");
  if (!is_univariate_in(p, var))
    throw UsageError("sturm_count: polynomial is not univariate in the chosen variable");
  Poly sf = squarefree_part(p, var);
  if (sf.degree(var) <= 0) return 0;
  SturmChain chain = build_sturm_chain(sf, var);
  return detail::variations_right_of(chain, lo) - detail::variations_right_of(chain, hi);
}

inline int sturm_count(const Poly& p, const std::string& var, const ExtendedRational& lo,
                       const ExtendedRational& hi) {
  return sturm_count(p, p.table()->index_of(var), lo, hi);
}

}  // namespace biharm

#endif
