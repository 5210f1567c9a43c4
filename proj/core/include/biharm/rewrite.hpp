#ifndef BIHARM_REWRITE_HPP
#define BIHARM_REWRITE_HPP

#include <string>
#include <utility>

#include "biharm/multipoly.hpp"

namespace biharm {

// Single-rule rewriting lhs_monomial -> rhs.  Validity requires the rule to
// be self-reduced (no rhs monomial divisible by the lhs) and terminating:
// every rhs monomial has strictly smaller total degree in the lhs's
// variables, so each rewrite strictly reduces that multidegree.
class RewriteRule {
 public:
  RewriteRule(Monomial lhs, Poly rhs, std::string justification, std::string anchor)
      : lhs_(std::move(lhs)),
        rhs_(std::move(rhs)),
        justification_(std::move(justification)),
        anchor_(std::move(anchor)) {
    if (lhs_.is_constant()) throw UsageError("RewriteRule: constant lhs");
    uint32_t lhs_weight = 0;
    for (std::size_t i = 0; i < lhs_.nvars(); ++i) lhs_weight += lhs_.exp(i);
    for (const auto& [m, c] : rhs_.terms()) {
      if (lhs_.divides(m))
        throw UsageError("RewriteRule: rhs not self-reduced");
      uint32_t w = 0;
      for (std::size_t i = 0; i < lhs_.nvars(); ++i)
        if (lhs_.exp(i) > 0) w += m.exp(i);
      if (w >= lhs_weight)
        throw UsageError("RewriteRule: rhs does not reduce the lhs multidegree");
    }
  }

  const Monomial& lhs() const { return lhs_; }
  const Poly& rhs() const { return rhs_; }
  const std::string& justification() const { return justification_; }
  const std::string& anchor() const { return anchor_; }

 private:
  Monomial lhs_;
  Poly rhs_;
  std::string justification_, anchor_;
};

// Normal form of p: no remaining monomial is divisible by rule.lhs().
inline Poly reduce_by_rewrite(Poly p, const RewriteRule& rule) {
  for (;;) {
    bool changed = false;
    for (const auto& [m, c] : p.terms()) {
      if (rule.lhs().divides(m)) {
        Monomial q = m / rule.lhs();
        Rational coeff = c;
        p.add_term(m, -coeff);
        p += rule.rhs().mul_monomial(q, coeff);
        changed = true;
        break;  // term map was modified; restart the scan
      }
    }
    if (!changed) return p;
  }
}

}  // namespace biharm

#endif
