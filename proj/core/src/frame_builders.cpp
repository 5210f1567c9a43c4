#include "biharm/frame_builders.hpp"

#include "biharm/poly_io.hpp"

namespace biharm {

namespace {

VarTablePtr full_table() {
  static VarTablePtr t =
      VarTable::make({"u", "k2", "k3", "a2", "a3", "b2", "b3", "f", "c"});
  return t;
}

VarTablePtr reduced_table() {
  static VarTablePtr t = VarTable::make({"u", "S", "K", "f", "c"});
  return t;
}

}  // namespace

FrameContext build_full_context() {
  VarTablePtr t = full_table();
  FrameContext ctx(t, {t->index_of("c")});

  // X1: second-order equation for f, Codazzi curvature derivatives, Gauss
  // derivatives of the connection forms
  ctx.set_rule(Direction::X1, "f", ctx.rat("u"));
  ctx.set_rule(Direction::X1, "u",
               ctx.rat("u*(a2+a3) - (2*k2*k3 + 3*c - 45/2*f^2)*f"));
  ctx.set_rule(Direction::X1, "k2", ctx.rat("(k2 + 3/2*f)*a2"));
  ctx.set_rule(Direction::X1, "k3", ctx.rat("(k3 + 3/2*f)*a3"));
  ctx.set_rule(Direction::X1, "a2", ctx.rat("a2^2 + c - 3/2*f*k2"));
  ctx.set_rule(Direction::X1, "a3", ctx.rat("a3^2 + c - 3/2*f*k3"));
  ctx.set_rule(Direction::X1, "b2", ctx.rat("a2*b2"));
  ctx.set_rule(Direction::X1, "b3", ctx.rat("a3*b3"));

  // X2: f and u are X2-constant; curvature and connection derivatives from
  // the Codazzi data.  No rules for b2, b3 along X2.
  ctx.set_rule(Direction::X2, "f", ctx.rat("0"));
  ctx.set_rule(Direction::X2, "u", ctx.rat("0"));
  ctx.set_rule(Direction::X2, "k2", ctx.rat("-(k3-k2)*b3"));
  ctx.set_rule(Direction::X2, "k3", ctx.rat("(k3-k2)*b3"));
  ctx.set_rule(Direction::X2, "a3", ctx.rat("b3*(a3-a2)"));
  ctx.set_rule(Direction::X2, "a2",
               ctx.rat("-b3*(a3-a2)*u - 2*f*(k3-k2)^2*b3", "u"));

  // k2 + k3 = 9/2 f, solved for k2; preserved identically along X2 (the
  // X1 prolongation is the u-compatibility relation established by the
  // preliminary chain)
  ctx.add_constraint(Constraint::solved(
      ctx.poly("k2 + k3 - 9/2*f"), "curvature-sum", "eq:sum_curv23",
      t->index_of("k2"), ctx.poly("9/2*f - k3"), {Direction::X2}));

  ctx.add_assumption(ctx.poly("u"), "u", "u = X1(f) != 0 on the working open set");
  ctx.add_assumption(ctx.poly("f"), "f", "f = |H| > 0");
  ctx.add_assumption(ctx.poly("k3 - k2"), "k3-k2", "distinct principal curvatures");
  return ctx;
}

FrameContext build_reduced_context() {
  VarTablePtr t = reduced_table();
  FrameContext ctx(t, {t->index_of("c")});

  ctx.set_rule(Direction::X1, "f", ctx.rat("u"));
  ctx.set_rule(Direction::X1, "u", ctx.rat("f*(-13/2*K - 9*c + 369/8*f^2)"));
  ctx.set_rule(Direction::X1, "K", ctx.rat("(K + 9*f^2)*S - 27/4*f*u"));
  ctx.set_rule(Direction::X1, "S", ctx.rat("S^2 + 2*K + 4*c - 27/4*f^2"));

  Monomial uS = Monomial::unit(t->size(), t->index_of("u")) *
                Monomial::unit(t->size(), t->index_of("S"));
  RewriteRule rule(uS, ctx.poly("f*(-9/2*K - 6*c + 189/8*f^2)"),
                   "product of X1(f) with the connection-form sum", "eq:X_1f_1");
  ctx.add_constraint(Constraint::rewrite(
      ctx.poly("u*S - f*(-9/2*K - 6*c + 189/8*f^2)"), "uS-constraint", "eq:X_1f_1",
      std::move(rule), {}));

  ctx.add_assumption(ctx.poly("u"), "u", "u = X1(f) != 0 on the working open set");
  ctx.add_assumption(ctx.poly("f"), "f", "f = |H| > 0");
  return ctx;
}

FrameContext build_postbeta_context() {
  FrameContext ctx = build_full_context();
  VarTablePtr t = ctx.table();

  // b2 = b3 = 0 (established by the vanishing certificate)
  ctx.add_constraint(Constraint::solved(ctx.poly("b2"), "b2-vanishes",
                                        "eq:beta3=0_5", t->index_of("b2"),
                                        ctx.poly("0"), {Direction::X1}));
  ctx.add_constraint(Constraint::solved(ctx.poly("b3"), "b3-vanishes",
                                        "eq:beta3=0_5", t->index_of("b3"),
                                        ctx.poly("0"), {Direction::X1}));

  // X1(k2 + k3 - 9/2 f) = 0 solved for u, with k2 already eliminated:
  //   u = 4/3 f a2 + 1/3 f a3 + 2/9 k3 (a3 - a2)
  ctx.add_constraint(Constraint::solved(
      ctx.poly("(k2 + 3/2*f)*a2 + (k3 + 3/2*f)*a3 - 9/2*u"), "u-compatibility",
      "eq:1-form_conn", t->index_of("u"),
      ctx.poly("4/3*f*a2 + 1/3*f*a3 + 2/9*k3*(a3 - a2)"), {Direction::X2}));

  // Gauss product relation with b = 0: a2*a3 = -(K + c), solved for c with
  // k2 eliminated
  ctx.add_constraint(Constraint::solved(
      ctx.poly("a2*a3 + k2*k3 + c"), "gauss-product", "eq:Gauss2",
      t->index_of("c"), ctx.poly("-a2*a3 - 9/2*f*k3 + k3^2"),
      {Direction::X1, Direction::X2}));
  return ctx;
}

Poly full_K(const FrameContext& ctx) { return ctx.poly("k2*k3"); }
Poly full_S(const FrameContext& ctx) { return ctx.poly("a2+a3"); }

}  // namespace biharm
