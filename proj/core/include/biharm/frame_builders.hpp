#ifndef BIHARM_FRAME_BUILDERS_HPP
#define BIHARM_FRAME_BUILDERS_HPP

#include "biharm/frame_context.hpp"

namespace biharm {

// Moving-frames context for a three-curvature hypersurface of a
// 4-dimensional space form with X1 = grad f / |grad f|:
//   generators u, k2, k3, a2, a3, b2, b3, f, c   (c constant),
//   f = |H| > 0, u = X1(f), k1 = -3/2 f, a_i / b_i the connection-form
//   evaluations, constraint k2 + k3 = 9/2 f.
// X1 rules encode the second-order equation for f, the curvature and
// connection derivatives; X2 rules encode the Codazzi data (b2, b3 have no
// X2 rule).  K = k2*k3 and S = a2+a3 are available as abbreviations.
FrameContext build_full_context();

// Reduced context on {u, S, K, f, c} valid after b2 = b3 = 0 is
// established: X1 closes on these five generators, with the product
// constraint u*S = f*(-9/2 K - 6c + 189/8 f^2) oriented as a rewrite rule.
FrameContext build_reduced_context();

// Full context augmented with the identities available once both b's
// vanish: the u-compatibility relation (the X1-prolongation of the
// curvature-sum constraint) and the Gauss product relation
// a2*a3 = -(K + c), all as triangular solved substitutions.
FrameContext build_postbeta_context();

// abbreviations over the full/postbeta table
Poly full_K(const FrameContext& ctx);  // k2*k3
Poly full_S(const FrameContext& ctx);  // a2+a3

}  // namespace biharm

#endif
