#include "biharm/frame_context.hpp"

#include "biharm/poly_io.hpp"

namespace biharm {

Constraint Constraint::solved(Poly constraint, std::string name, std::string anchor,
                              std::size_t var, Poly rhs,
                              std::vector<Direction> preserved) {
  Constraint c;
  c.poly = std::move(constraint);
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.form = Form::SolvedVar;
  c.solved_var = var;
  c.solved_rhs = std::move(rhs);
  c.preserved_along = std::move(preserved);
  if (c.solved_rhs.degree(var) >= 0 && !c.solved_rhs.is_zero())
    throw UsageError("Constraint: solved rhs mentions the solved variable");
  return c;
}

Constraint Constraint::rewrite(Poly constraint, std::string name, std::string anchor,
                               RewriteRule rule, std::vector<Direction> preserved) {
  Constraint c;
  c.poly = std::move(constraint);
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.form = Form::MonomialRule;
  c.rule = std::move(rule);
  c.preserved_along = std::move(preserved);
  return c;
}

void FrameContext::set_rule(Direction dir, const std::string& generator, RatQ value) {
  std::size_t idx = table_->index_of(generator);
  if (constants_.count(idx))
    throw UsageError("FrameContext: rule for a declared constant");
  rules_[dir][idx] = std::move(value);
}

void FrameContext::add_constraint(Constraint c) { constraints_.push_back(std::move(c)); }

void FrameContext::add_assumption(Poly poly, std::string name, std::string description) {
  assumptions_.push_back({std::move(poly), std::move(name), std::move(description)});
}

bool FrameContext::has_rule(Direction dir, std::size_t var) const {
  if (constants_.count(var)) return true;
  auto it = rules_.find(dir);
  return it != rules_.end() && it->second.count(var) > 0;
}

const RatQ& FrameContext::rule(Direction dir, std::size_t var) const {
  auto it = rules_.find(dir);
  if (it != rules_.end()) {
    auto jt = it->second.find(var);
    if (jt != it->second.end()) return jt->second;
  }
  throw UsageError(std::string("FrameContext: no ") + direction_name(dir) +
                   " rule for generator '" + table_->name(var) + "'");
}

std::size_t FrameContext::rule_count(Direction dir) const {
  auto it = rules_.find(dir);
  return it == rules_.end() ? 0 : it->second.size();
}

RatQ FrameContext::derive(Direction dir, const Poly& p) const {
  RatQ out(Poly::zero(table_));
  for (std::size_t v = 0; v < table_->size(); ++v) {
    Poly partial = p.differentiate(v);
    if (partial.is_zero()) continue;
    if (constants_.count(v)) continue;  // derivative zero in every direction
    out += RatQ(partial) * rule(dir, v);
  }
  return out;
}

RatQ FrameContext::derive(Direction dir, const RatQ& r) const {
  RatQ dn = derive(dir, r.num());
  if (r.is_polynomial()) {
    Rational scale = r.den().constant_value().inv();
    return RatQ(dn.num().scaled(scale), dn.den());
  }
  RatQ dd = derive(dir, r.den());
  RatQ num(r.num()), den(r.den());
  return (dn * den - num * dd) / (den * den);
}

Poly FrameContext::normal_form(const Poly& p) const {
  Poly r = p;
  for (const auto& c : constraints_) {
    if (c.form == Constraint::Form::SolvedVar) {
      if (r.degree(c.solved_var) > 0) r = r.substitute_poly(c.solved_var, c.solved_rhs);
    } else {
      r = reduce_by_rewrite(r, *c.rule);
    }
  }
  // single extra pass detects interaction between rewrite rules and later
  // substitutions; the constraint systems used here are triangular, so one
  // repeat suffices and is asserted
  for (const auto& c : constraints_) {
    if (c.form == Constraint::Form::SolvedVar) {
      if (r.degree(c.solved_var) > 0)
        throw UsageError("FrameContext: constraint system is not triangular");
    } else {
      Poly again = reduce_by_rewrite(r, *c.rule);
      if (again != r) throw UsageError("FrameContext: rewrite not confluent with substitutions");
    }
  }
  return r;
}

Poly FrameContext::reduce_num(const RatQ& r) const { return normal_form(r.num()); }

StepReport FrameContext::verify_identity(const std::string& name,
                                         const std::string& claim,
                                         const std::string& anchor, const RatQ& lhs,
                                         const RatQ& rhs) const {
  Poly witness = reduce_num(lhs - rhs);
  if (witness.is_zero()) return StepReport::pass(name, claim, anchor);
  return StepReport::fail(name, claim, anchor, format_polynomial(witness));
}

std::vector<StepReport> FrameContext::check_preservation() const {
  std::vector<StepReport> out;
  for (const auto& c : constraints_) {
    for (Direction dir : c.preserved_along) {
      Poly witness = reduce_num(derive(dir, c.poly));
      std::string name = c.name + "/" + direction_name(dir);
      std::string claim = std::string(direction_name(dir)) + "(" + c.name +
                          ") reduces to 0 modulo the context constraints";
      if (witness.is_zero())
        out.push_back(StepReport::pass(name, claim, c.anchor));
      else
        out.push_back(StepReport::fail(name, claim, c.anchor, format_polynomial(witness)));
    }
  }
  return out;
}

Poly FrameContext::poly(const std::string& text) const {
  return parse_polynomial(text, table_);
}

RatQ FrameContext::rat(const std::string& num, const std::string& den) const {
  return RatQ(poly(num), poly(den));
}

RatQ FrameContext::var(const std::string& name) const {
  return RatQ(Poly::variable(table_, name));
}

std::optional<std::string> factor_over_assumptions(
    const Poly& value, const std::vector<Assumption>& assumptions) {
  if (value.is_zero()) return std::nullopt;
  Poly r = value;
  std::string desc;
  bool progress = true;
  while (!r.is_constant() && progress) {
    progress = false;
    for (const auto& a : assumptions) {
      if (a.poly.is_constant()) continue;
      if (auto q = try_exact_divide(r, a.poly)) {
        r = *q;
        desc += (desc.empty() ? "" : " * ") + a.name;
        progress = true;
        break;
      }
    }
  }
  if (!r.is_constant()) return std::nullopt;
  Rational c = r.constant_value();
  if (c.is_zero()) return std::nullopt;
  std::string lead = c.to_string();
  if (desc.empty()) return lead;
  if (c.is_one()) return desc;
  return lead + " * " + desc;
}

}  // namespace biharm
