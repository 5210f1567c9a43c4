#include "biharm/chain_certificates.hpp"
#include "biharm/poly_io.hpp"

namespace biharm {

Certificate verify_prelim_chain() {
  Certificate cert;
  cert.name = "prelim";
  FrameContext full = build_full_context();
  FrameContext pb = build_postbeta_context();

  // (a) |A|^2 = k1^2 + k2^2 + k3^2 with k1 = -3/2 f equals 45/2 f^2 - 2K
  {
    RatQ lhs = full.rat("9/4*f^2 + k2^2 + k3^2");
    RatQ rhs = full.rat("45/2*f^2 - 2*k2*k3");
    cert.add(full.verify_identity(
        "norm_A2", "|A|^2 = (-3/2 f)^2 + k2^2 + k3^2 = 45/2*f^2 - 2*K modulo k2+k3=9/2*f",
        "eq:norm_A2", lhs, rhs));
  }

  // degenerate spot check: k2 = k3 = 9/4 f gives 99/8 f^2 along both routes
  {
    VarTablePtr t = full.table();
    Poly nine_quarters_f = full.poly("9/4*f");
    Poly direct = full.poly("9/4*f^2 + k2^2 + k3^2")
                      .substitute_poly(t->index_of("k2"), nine_quarters_f)
                      .substitute_poly(t->index_of("k3"), nine_quarters_f);
    Poly viaK = full.poly("45/2*f^2 - 2*k2*k3")
                    .substitute_poly(t->index_of("k2"), nine_quarters_f)
                    .substitute_poly(t->index_of("k3"), nine_quarters_f);
    Poly expect = full.poly("99/8*f^2");
    bool ok = direct == expect && viaK == expect;
    StepReport s = ok ? StepReport::pass("norm_A2-spot",
                                         "umbilic-like spot check k2 = k3 = 9/4 f "
                                         "gives |A|^2 = 99/8 f^2 along both routes",
                                         "eq:norm_A2")
                      : StepReport::fail("norm_A2-spot", "spot check 99/8 f^2",
                                         "eq:norm_A2",
                                         format_polynomial(direct - viaK));
    cert.add(s);
  }

  // (b) rewritten second derivatives of k2, k3
  const std::string printed2_text =
      "21/2*a2*u + 2*(k2*k3 + c)*(k3 + 3/2*f) + (c - 3/2*f*k2)*(k2 + 3/2*f)";
  const std::string printed3_text =
      "21/2*a3*u + 2*(k2*k3 + c)*(k2 + 3/2*f) + (c - 3/2*f*k3)*(k3 + 3/2*f)";
  {
    RatQ lhs2 = pb.derive(Direction::X1, pb.derive(Direction::X1, pb.poly("k2")));
    cert.add(pb.verify_identity(
        "gauss1-reloaded-k2",
        "X1(X1(k2)) = 21/2*a2*X1(f) + 2(K+c)(k3+3/2 f) + (c-3/2 f k2)(k2+3/2 f)",
        "eq:Gauss1_reloaded", lhs2, pb.rat(printed2_text)));
    RatQ lhs3 = pb.derive(Direction::X1, pb.derive(Direction::X1, pb.poly("k3")));
    cert.add(pb.verify_identity(
        "gauss1-reloaded-k3",
        "X1(X1(k3)) = 21/2*a3*X1(f) + 2(K+c)(k2+3/2 f) + (c-3/2 f k3)(k3+3/2 f)",
        "eq:Gauss1_reloaded", lhs3, pb.rat(printed3_text)));
  }

  // (b') 2/9 of the printed sum gives the second-order equation for f
  Poly fpp = full.poly("7/3*u*(a2+a3) + f*(4*k2*k3 + 5*c - 9*f^2)");
  {
    Poly sum = full.poly(printed2_text) + full.poly(printed3_text);
    cert.add(full.verify_identity(
        "f''-from-gauss1",
        "2/9 (X1X1(k2) + X1X1(k3)) = 7/3*X1(f)*(a2+a3) + f*(4K + 5c - 9 f^2)",
        "eq:f''_from_Gauss1", RatQ(sum.scaled(Rational(2, 9))), RatQ(fpp)));
  }

  // (c) equating with the second-order rule forces the uS constraint; the
  // residual factors exactly as 4/3*(u*S - f*Rt)
  Poly Rt = full.poly("-9/2*k2*k3 - 6*c + 189/8*f^2");
  Poly uS_minus_fRt = full.poly("u*(a2+a3)") - full.poly("f") * Rt;
  {
    Poly II_form = full.poly("u*(a2+a3) - (2*k2*k3 + 3*c - 45/2*f^2)*f");
    Poly residual = fpp - II_form;
    Poly target = uS_minus_fRt.scaled(Rational(4, 3));
    bool ok = residual == target;
    StepReport s =
        ok ? StepReport::pass(
                 "uS-constraint",
                 "f''-difference factors exactly as 4/3*(u*S - f*(-9/2*K - 6*c + "
                 "189/8*f^2)); coefficient tuple (-9/2, -6, 189/8)",
                 "eq:X_1f_1")
           : StepReport::fail("uS-constraint", "residual = 4/3*(u*S - f*Rt)",
                              "eq:X_1f_1", format_polynomial(residual - target));
    cert.add(s);
  }

  // (d) substituting the uS constraint back yields the reduced u-rule
  {
    Poly lhs = fpp - uS_minus_fRt.scaled(Rational(7, 3));
    Poly rhs = full.poly("f*(-13/2*k2*k3 - 9*c + 369/8*f^2)");
    bool ok = lhs == rhs;
    StepReport s =
        ok ? StepReport::pass("x1x1f",
                              "X1(X1(f)) = f*(-13/2*K - 9*c + 369/8*f^2); "
                              "coefficient tuple (-13/2, -9, 369/8)",
                              "eq:X_1X_1f_1")
           : StepReport::fail("x1x1f", "X1(X1(f)) reduced form", "eq:X_1X_1f_1",
                              format_polynomial(lhs - rhs));
    cert.add(s);
  }

  // (e) closed form of X1(K)
  {
    RatQ lhs = pb.derive(Direction::X1, pb.poly("k2*k3"));
    RatQ rhs = pb.rat("(k2*k3 + 9*f^2)*(a2+a3) - 27/4*f*u");
    cert.add(pb.verify_identity("x1K",
                                "X1(K) = (K + 9*f^2)*(a2+a3) - 27/4*f*X1(f)",
                                "eq:X_1K", lhs, rhs));
  }

  // declared constraint preservation in both contexts
  for (auto& s : full.check_preservation()) cert.add(std::move(s));
  for (auto& s : pb.check_preservation()) cert.add(std::move(s));

  cert.conclusion =
      "every rule of the reduced context {f, u, K, S, c} is a consequence of "
      "the full moving-frames system";
  return cert;
}

namespace {

// 2<->3 index swap with the radical sign twist b2 -> -b3, b3 -> -b2.
Poly swap23(const Poly& p) {
  const VarTablePtr& t = p.table();
  std::size_t k2 = t->index_of("k2"), k3 = t->index_of("k3");
  std::size_t a2 = t->index_of("a2"), a3 = t->index_of("a3");
  std::size_t b2 = t->index_of("b2"), b3 = t->index_of("b3");
  Poly out(t);
  for (const auto& [m, c] : p.terms()) {
    std::vector<uint32_t> e = m.exps();
    std::swap(e[k2], e[k3]);
    std::swap(e[a2], e[a3]);
    std::swap(e[b2], e[b3]);
    bool neg = ((e[b2] + e[b3]) % 2) == 1;
    out.add_term(Monomial(std::move(e)), neg ? -c : c);
  }
  return out;
}

RatQ swap23(const RatQ& r) { return RatQ(swap23(r.num()), swap23(r.den())); }

}  // namespace

Certificate verify_beta_vanishing() {
  Certificate cert;
  cert.name = "beta";
  FrameContext ctx = build_full_context();

  const RatQ g = ctx.rat("f", "u");
  const RatQ b3 = ctx.var("b3");
  const Poly k3mk2 = ctx.poly("k3 - k2");
  const RatQ dk = RatQ(k3mk2);

  // first-order relation of beta3=0_3 in quotient form:
  //   X1(f/u) = -(a3-a2)^2/(k3-k2)^2 + (f/u)(3 a2 - a3 - 2 X1(k3-k2)/(k3-k2))
  RatQ X1dk = ctx.derive(Direction::X1, k3mk2);
  RatQ rhs3 = -ctx.rat("(a3-a2)^2", "(k3-k2)^2") +
              g * (ctx.rat("3*a2 - a3") - RatQ::constant(ctx.table(), Rational(2)) *
                                              X1dk / dk);
  RatQ T = ctx.derive(Direction::X1, g) - rhs3;

  const RatQ X2a2 = ctx.rule(Direction::X2, ctx.table()->index_of("a2"));
  const RatQ X1a2 = ctx.rule(Direction::X1, ctx.table()->index_of("a2"));

  // (a) bracket gap on a2 equals -2 b3 (k3-k2)^2 times the first-order
  // relation; so on the branch b3 != 0 that relation holds
  RatQ gap_a2 = ctx.derive(Direction::X1, X2a2) - ctx.derive(Direction::X2, X1a2) -
                RatQ(ctx.poly("a2")) * X2a2;
  {
    RatQ target = -RatQ(k3mk2 * k3mk2) * b3 * T * RatQ::constant(ctx.table(), Rational(2));
    StepReport s = ctx.verify_identity(
        "bracket-gap-a2",
        "[X1,X2]a2 - a2*X2(a2) = -2*b3*(k3-k2)^2 * (X1(f/u) - rhs); on the "
        "branch b3 != 0 this forces the first-order relation for f/u",
        "eq:beta3=0_1", gap_a2, target);
    s.divisions.push_back("factor b3 extracted (branch hypothesis b3 != 0)");
    s.divisions.push_back("factor (k3-k2)^2 extracted (assumption k2 != k3)");
    cert.add(s);
  }

  // the gap carries b3 to exactly the first power
  {
    Poly gap_num = gap_a2.num();
    auto q1 = try_exact_divide(gap_num, ctx.poly("b3"));
    bool once = q1.has_value() && !try_exact_divide(*q1, ctx.poly("b3")).has_value();
    bool t_free = !try_exact_divide(T.num(), ctx.poly("b3")).has_value();
    cert.add(once && t_free
                 ? StepReport::pass("b3-degree",
                                    "the extracted factor is exactly b3 (degree 1); "
                                    "the first-order relation itself is b3-free",
                                    "eq:beta3=0_1")
                 : StepReport::fail("b3-degree", "b3 appears to the first power",
                                    "eq:beta3=0_1", format_polynomial(gap_num)));
  }

  // printed-intermediate comparison; a mismatch flags but does not fail
  {
    RatQ printed2 =
        b3 * (ctx.rat("-2*a3^2 - a2^2 + 3*a2*a3") +
              RatQ::constant(ctx.table(), Rational(2)) * g *
                  (RatQ::constant(ctx.table(), Rational(-2)) * dk * X1dk +
                   RatQ(k3mk2 * k3mk2) * ctx.rat("2*a2 - a3")) -
              RatQ::constant(ctx.table(), Rational(2)) *
                  ctx.derive(Direction::X1, g) * RatQ(k3mk2 * k3mk2));
    RatQ engine2 = ctx.derive(Direction::X1, X2a2) - ctx.derive(Direction::X2, X1a2);
    StepReport s = StepReport::pass(
        "printed-intermediate",
        "the printed expansion of [X1,X2]a2 matches the engine re-derivation",
        "eq:beta3=0_2");
    if (engine2 != printed2) {
      s.flags.push_back("paper-text mismatch: re-derived from base rules instead");
      s.witness = (engine2 - printed2).to_string();
    }
    cert.add(s);
  }

  // (b) part 1: bracket gap on k2 extracts a second branch relation Gt
  const Poly Gt = ctx.poly("2*u*(a3-a2) + (k2-k3)*f*(3*f+2*k2)");
  {
    const RatQ X2k2 = ctx.rule(Direction::X2, ctx.table()->index_of("k2"));
    const RatQ X1k2 = ctx.rule(Direction::X1, ctx.table()->index_of("k2"));
    RatQ gap_k2 = ctx.derive(Direction::X1, X2k2) - ctx.derive(Direction::X2, X1k2) -
                  RatQ(ctx.poly("a2")) * X2k2;
    RatQ target = RatQ(ctx.poly("b3") * ctx.poly("k2-k3") * Gt, ctx.poly("u"));
    StepReport s = ctx.verify_identity(
        "bracket-gap-k2",
        "[X1,X2]k2 - a2*X2(k2) = b3*(k2-k3)/u * (2u(a3-a2) + (k2-k3) f (3f+2k2)); "
        "on the branch b3 != 0 the last factor vanishes",
        "eq:X_iK", gap_k2, target);
    s.divisions.push_back("factor b3 extracted (branch hypothesis b3 != 0)");
    s.divisions.push_back("factor (k2-k3) extracted (assumption k2 != k3)");
    s.divisions.push_back("denominator u (assumption u != 0)");
    cert.add(s);
  }

  // (b) part 2: X2 across the first-order relation
  const Poly Phi = ctx.poly(
      "4*a2*u - 4*a3*u + 3*f^2*k2 - 3*f^2*k3 - f*k2^2 + 4*f*k2*k3 - 3*f*k3^2");
  {
    RatQ lhs = ctx.derive(Direction::X2, ctx.derive(Direction::X1, g));
    cert.add(ctx.verify_identity(
        "x2-of-x1-quotient", "X2(X1(f/u)) = 0 identically (f and u are X2-constant)",
        "eq:X_iX_1f", lhs, RatQ(Poly::zero(ctx.table()))));

    RatQ W = ctx.derive(Direction::X2, rhs3);
    RatQ target = RatQ(ctx.poly("2*b3*f") * Phi, ctx.poly("u^2"));
    StepReport s = ctx.verify_identity(
        "x2-of-relation",
        "X2 applied to the first-order relation equals 2*b3*f/u^2 times a "
        "linear form Phi; on the branch b3 != 0, Phi = 0",
        "eq:beta3=0_4", W, target);
    s.divisions.push_back("factor b3 extracted (branch hypothesis b3 != 0)");
    s.divisions.push_back("factor f extracted (assumption f > 0)");
    s.divisions.push_back("denominator u^2 (assumption u != 0)");
    cert.add(s);
  }

  // (b) part 3: the two branch relations combine linearly to beta3=0_4
  const Poly B4 = ctx.poly("2*u*(a3-a2) + f*(k3-k2)^2");
  {
    Poly combo = Gt - Phi - B4.scaled(Rational(3));
    cert.add(combo.is_zero()
                 ? StepReport::pass(
                       "combine-to-beta4",
                       "Gt - Phi = 3*(2u(a3-a2) + f(k3-k2)^2) exactly, so "
                       "2(a3-a2) = -(f/u)(k3-k2)^2 on the branch",
                       "eq:beta3=0_4")
                 : StepReport::fail("combine-to-beta4", "Gt - Phi = 3*B4",
                                    "eq:beta3=0_4", format_polynomial(combo)));
  }

  // (c) one more X2-derivative halves the relation
  const RatQ B4r = RatQ(B4, ctx.poly("u"));
  const Poly B5 = ctx.poly("u*(a3-a2) + 2*f*(k3-k2)^2");
  const RatQ B5r = RatQ(B5, ctx.poly("u"));
  {
    RatQ lhs = ctx.derive(Direction::X2, B4r);
    RatQ target = RatQ::constant(ctx.table(), Rational(4)) * b3 * B5r;
    StepReport s = ctx.verify_identity(
        "x2-of-beta4",
        "X2(2(a3-a2) + (f/u)(k3-k2)^2) = 4*b3*((a3-a2) + 2(f/u)(k3-k2)^2); on "
        "the branch b3 != 0 the second factor vanishes",
        "eq:beta3=0_5", lhs, target);
    s.divisions.push_back("factor 4*b3 extracted (branch hypothesis b3 != 0)");
    cert.add(s);
  }

  // (d) the two relations are linearly inconsistent
  {
    RatQ combo = B4r - RatQ::constant(ctx.table(), Rational(2)) * B5r +
                 RatQ::constant(ctx.table(), Rational(3)) * g * RatQ(k3mk2 * k3mk2);
    StepReport s = ctx.verify_identity(
        "contradiction",
        "beta4 - 2*beta5 = -3*(f/u)*(k3-k2)^2 exactly; with both zero on the "
        "branch, 3*(f/u)*(k3-k2)^2 = 0 contradicts f > 0, u != 0, k2 != k3, "
        "so b3 = 0",
        "eq:beta3=0_5", combo, RatQ(Poly::zero(ctx.table())));
    s.divisions.push_back("contradiction cites assumptions f > 0, u != 0, k2 != k3");
    cert.add(s);
  }

  // (e) the b2 case by the index swap 2<->3 (with the radical sign twist
  // b2 -> -b3, b3 -> -b2 forced by the shared k3-k2 denominators)
  {
    struct Expected {
      const char* gen;
      const char* num;
      const char* den;
    };
    const Expected x3_rules[] = {
        {"f", "0", "1"},
        {"u", "0", "1"},
        {"k2", "(k3-k2)*b2", "1"},
        {"k3", "-(k3-k2)*b2", "1"},
        {"a2", "b2*(a3-a2)", "1"},
        {"a3", "-b2*(a3-a2)*u + 2*f*(k3-k2)^2*b2", "u"},
    };
    bool all_ok = true;
    std::string bad;
    for (const auto& e : x3_rules) {
      // X3(gen) must equal the swap image of X2(swap(gen))
      std::string swapped_gen = e.gen;
      if (swapped_gen == "k2") swapped_gen = "k3";
      else if (swapped_gen == "k3") swapped_gen = "k2";
      else if (swapped_gen == "a2") swapped_gen = "a3";
      else if (swapped_gen == "a3") swapped_gen = "a2";
      RatQ from_swap = swap23(ctx.rule(Direction::X2, ctx.table()->index_of(swapped_gen)));
      RatQ expected = ctx.rat(e.num, e.den);
      if (!(from_swap == expected)) {
        all_ok = false;
        bad = std::string(e.gen) + ": " + (from_swap - expected).to_string();
        break;
      }
    }
    cert.add(all_ok
                 ? StepReport::pass(
                       "b2-by-symmetry",
                       "the X3 rule table printed for the symmetric case equals "
                       "the 2<->3 swap of the X2 table (with b2 -> -b3, b3 -> "
                       "-b2), so the contradiction chain applies verbatim to b2",
                       "eq:diff_consecII_12")
                 : StepReport::fail("b2-by-symmetry", "X3 table = swapped X2 table",
                                    "eq:diff_consecII_12", bad));
  }

  cert.conclusion =
      "b2 = b3 = 0: the connection forms mixing the X2/X3 principal "
      "directions vanish on the working open set";
  return cert;
}

}  // namespace biharm
