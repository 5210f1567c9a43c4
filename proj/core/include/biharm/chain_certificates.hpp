#ifndef BIHARM_CHAIN_CERTIFICATES_HPP
#define BIHARM_CHAIN_CERTIFICATES_HPP

#include <cstdint>
#include <functional>

#include "biharm/frame_builders.hpp"
#include "biharm/step_report.hpp"

namespace biharm {

using ProgressSink = std::function<void(const std::string&)>;

// Preliminary chain: the squared-shape-operator identity, the rewritten
// curvature second derivatives, the second-order equation for f, the uS
// product constraint and the closed form of X1(K).  Establishes every rule
// of the reduced context as a consequence of the full system.
Certificate verify_prelim_chain();

// Contradiction chain forcing b3 = 0 (and b2 = 0 by the index swap):
// bracket gaps on a2 and k2 factor through b3, the X2-derivative of the
// resulting first-order relation combines to 2(a3-a2) = -(f/u)(k3-k2)^2,
// one more X2-derivative halves it, and the two together force
// 3 (f/u) (k3-k2)^2 = 0 against the standing assumptions.
Certificate verify_beta_vanishing();

// X1-prolongation of the uS constraint: residual u*C - f*S*D with
// C = 13/2 K + 10c - 108 f^2 and D = 13/2 K + 15c - 441/4 f^2, plus the
// two squared forms u^2*C = f^2*Rt*D and S^2*D = Rt*C.
StepReport derive_x1f2();

// The quartic-in-K polynomial relation between f, K and c obtained by
// differentiating u*C - f*S*D = 0 and eliminating u^2, uS, S^2.
// Normalized to primitive form with K^4 coefficient +140608.
Poly derive_first_pol();
Certificate firstpol_certificate();

// dK/df = X1(K)/u with S/u eliminated via u*C = f*S*D.
RatQ derive_dKdf();

// Resultant elimination of K between the quartic relation and its
// total-derivative companion; certifies a nonzero univariate consequence
// for f (symbolically in c and at c = 1, 0, -1), cross-checked by seeded
// rational specializations and a fraction-free determinant.
Certificate eliminate_to_univariate(uint64_t seed = 0,
                                    const ProgressSink& progress = {});

// The two vanishing-denominator loci D = 0 and C = 0 substituted into the
// quartic relation: each yields a nonzero even polynomial of degree 8 in f.
Certificate verify_degenerate_branches();

// Over Q(sqrt(3)) with k1 symbolic: the three-curvature cotangent
// parameterization satisfies
//   (k1^2 + k2^2 + k3^2) (1 - 3 k1^2)^2 = 9 k1^6 + 45 k1^2 + 6.
StepReport verify_isoparametric_identity();

// Non-existence of compact CMC proper biharmonic hypersurfaces with three
// distinct principal curvatures in the unit sphere: the trace condition
// |A|^2 = m collapses to 3 k^6 - 9 k^4 + 21 k^2 + 1 = 0 independently of
// the multiplicity exponent, and that sextic has no real roots.
Certificate thm31_certificate();

}  // namespace biharm

#endif
