#pragma once

#include <vector>

#include "zetacode/code.hpp"
#include "zetacode/poly.hpp"

namespace zetacode {

// Weight-w coefficient M_{n,s}^{(w)} of the generic MDS enumerator with
// minimum distance s: C(n,w) sum_{i=0}^{w-s} (-1)^i C(w,i) (q^{w+1-s-i} - 1).
// Zero for w < s. Can be negative when no actual [n, n+1-s, s] code exists
// (virtual enumerator). Identity: sum_{w>=s} M^(w) = q^{n+1-s} - 1.
Int mds_weight(int n, int s, const Int& q, int w);

// P_C / D_C pair plus both coefficient vectors and context; the exact
// bridge between a weight distribution and its zeta data.
struct ZetaProfile {
  CodeProfile profile;
  RationalPoly P;          // zeta polynomial, P(1) = 1, deg <= r
  RationalPoly D;          // reduced polynomial, deg <= r-2, zero iff MDS
  std::vector<Rat> a;      // MDS-decomposition coefficients a_0..a_r
  std::vector<Rat> c;      // coefficients c_0..c_{r-2} of D
  bool mds = false;        // g = 0 flag (D forced zero)
  int r = 0;               // g + g_dual
};

// Reduced polynomial from a weight distribution:
// c_i = [sum_{w=d}^{d+i} C(n-w, n-d-i) V^(w)] / ((q-1) C(n, d+i)),
// where V^(w) = W^(w) below w = d+g and W^(w) - M_{n,n+1-k}^{(w)} at and
// above it. Returns the zero polynomial with mds_input set when g = 0.
struct DcResult {
  RationalPoly d;
  bool mds_input = false;
};
DcResult dc_from_weights(const WeightDistribution& w, const CodeProfile& p);

// Inverse direction:
// V^(w) = (q-1) C(n,w) sum_{i=0}^{min(w-d, r-2)} (-1)^{w-d-i} C(w, d+i) c_i
// for d <= w <= n, then W^(w) = V^(w) + [w >= d+g] M_{n,n+1-k}^{(w)}.
// (min(w-d, n-d-d_dual) from the direct statement equals min(w-d, r-2)
// identically: n-d-d_dual = r-2 for every profile.)
// The raw route returns unvalidated rationals (virtual profiles allowed);
// the public route demands non-negative integers.
std::vector<Rat> weights_from_dc_raw(const RationalPoly& d,
                                     const CodeProfile& p);
WeightDistribution weights_from_dc(const RationalPoly& d,
                                   const CodeProfile& p);

// P(t) = (1-t)(1-qt) D(t) + t^g and its exact inverse.
RationalPoly zeta_from_dc(const RationalPoly& d, int g, const Int& q);
RationalPoly dc_from_zeta(const RationalPoly& p, int g, const Int& q);

// Generating-function route, independent of the c_i formulas:
// W^(s) = (q-1) C(n,s) [t^{s-d}] (1-t)^{s-1} P(t) / (1-qt)  for s >= 1.
std::vector<Rat> weights_from_zeta_gf_raw(const RationalPoly& p,
                                          const CodeProfile& profile);
WeightDistribution weights_from_zeta_gf(const RationalPoly& p,
                                        const CodeProfile& profile);

// Unique a_0..a_r with W = sum_i a_i M_{n,d+i}: triangular solve on rows
// w = d..d+r, then the remaining rows and sum a_i = 1 are verified.
std::vector<Rat> mds_decomposition(const WeightDistribution& w,
                                   const CodeProfile& p);

// Full distribution from the first r-1 counts W^(d)..W^(d+r-2) through the
// reconstruction kernels lambda_w and the explicit MDS remainder term.
WeightDistribution reconstruct_general(const std::vector<Int>& low_weights,
                                       const CodeProfile& p);

// Assembles and cross-validates the whole profile (both routes must agree).
ZetaProfile build_zeta_profile(const WeightDistribution& w,
                               const CodeProfile& p);

// Coefficient of x^{n-v} y^v in (x-y)^A y^B (with A + B = n):
// (-1)^{v-B} C(A, v-B) for B <= v <= A+B, else 0. Shared by the
// reconstruction kernels here and in the self-duality module.
Rat binomial_kernel(int A, int B, int v);

}  // namespace zetacode
