#ifndef BIHARM_FRAME_CONTEXT_HPP
#define BIHARM_FRAME_CONTEXT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "biharm/ratfunc.hpp"
#include "biharm/rewrite.hpp"
#include "biharm/step_report.hpp"

namespace biharm {

enum class Direction { X1, X2 };

inline const char* direction_name(Direction d) {
  return d == Direction::X1 ? "X1" : "X2";
}

// Nonvanishing hypothesis of the derivation chain (u != 0, f > 0, ...).
// Every division by such a factor inside a certificate is logged.
struct Assumption {
  Poly poly;
  std::string name;
  std::string description;
};

// Algebraic constraint of a frame context, together with the reduction it
// induces on normal forms.  A constraint is either solved for one variable
// (var := rhs, applied as a substitution) or oriented as a monomial
// rewrite rule.  preserved_along lists the directions whose derivation is
// expected to reduce to zero modulo the context; prolongations along other
// directions are the new identities established by the certificate chain.
struct Constraint {
  enum class Form { SolvedVar, MonomialRule };

  Poly poly;
  std::string name;
  std::string anchor;
  Form form = Form::SolvedVar;
  std::size_t solved_var = 0;
  Poly solved_rhs;
  std::optional<RewriteRule> rule;
  std::vector<Direction> preserved_along;

  static Constraint solved(Poly constraint, std::string name, std::string anchor,
                           std::size_t var, Poly rhs,
                           std::vector<Direction> preserved);
  static Constraint rewrite(Poly constraint, std::string name, std::string anchor,
                            RewriteRule rule, std::vector<Direction> preserved);
};

// Differential-algebra context: named generators with per-direction
// derivation rules (extended to polynomials and quotients by linearity,
// Leibniz and the quotient rule), algebraic constraints, and nonvanishing
// assumptions.  Immutable after construction; all operations are pure.
class FrameContext {
 public:
  FrameContext(VarTablePtr table, std::set<std::size_t> constants)
      : table_(std::move(table)), constants_(std::move(constants)) {}

  const VarTablePtr& table() const { return table_; }

  void set_rule(Direction dir, const std::string& generator, RatQ value);
  void add_constraint(Constraint c);
  void add_assumption(Poly poly, std::string name, std::string description);

  bool has_rule(Direction dir, std::size_t var) const;
  const RatQ& rule(Direction dir, std::size_t var) const;
  std::size_t rule_count(Direction dir) const;
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Assumption>& assumptions() const { return assumptions_; }

  // Formal derivation along a direction; errors if a generator with a
  // nonzero partial has no rule in that direction.
  RatQ derive(Direction dir, const Poly& p) const;
  RatQ derive(Direction dir, const RatQ& r) const;

  // Normal form modulo the constraints: solved substitutions are applied
  // in declaration order, then monomial rewrite rules to a fixpoint.
  Poly normal_form(const Poly& p) const;

  // Normal form of the numerator of a quotient (denominators carry
  // nonvanishing assumptions and are not reduced).
  Poly reduce_num(const RatQ& r) const;

  // Cross-multiplies lhs - rhs and reduces modulo the constraints;
  // verified iff the normal form is exactly zero.
  StepReport verify_identity(const std::string& name, const std::string& claim,
                             const std::string& anchor, const RatQ& lhs,
                             const RatQ& rhs) const;

  // Preservation of each constraint along its declared directions.
  std::vector<StepReport> check_preservation() const;

  // convenience builders for polynomials over this context's table
  Poly poly(const std::string& text) const;
  RatQ rat(const std::string& num, const std::string& den = "1") const;
  RatQ var(const std::string& name) const;

 private:
  VarTablePtr table_;
  std::set<std::size_t> constants_;
  std::map<Direction, std::map<std::size_t, RatQ>> rules_;
  std::vector<Constraint> constraints_;
  std::vector<Assumption> assumptions_;
};

// Writes value = q * (product of assumption powers) with q a nonzero
// rational; returns a printable factorization ("-2 * b3 * f") when value
// factors completely over the assumption list, nullopt otherwise.
std::optional<std::string> factor_over_assumptions(
    const Poly& value, const std::vector<Assumption>& assumptions);

}  // namespace biharm

#endif
