#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetacode/poly.hpp"
#include "zetacode/rational.hpp"

namespace zetacode {

// Genus-g function-field data derived from an L-polynomial: the zeta
// numerator L (deg 2g, L(0) = 1, functional equation
// L(t) = L(1/(qt)) q^g t^{2g}), the effective-divisor counts A_0..A_{g-1}
// (leading series coefficients of L/((1-t)(1-qt))), the class number
// h = L(1), the reduced polynomial D_F with (1-t)(1-qt) D_F + h t^g = L,
// and the virtual class numbers h_0..h_g of the iterated genus reduction.
struct FunctionFieldProfile {
  Int q;
  int g = 0;
  RationalPoly L;          // integer coefficients
  std::vector<Int> A;      // A_0..A_{g-1}, A_0 = 1
  Int h;                   // L(1), positive
  RationalPoly D_F;        // integer coefficients, degree <= 2g-2
  std::vector<Rat> h_seq;  // h_0..h_g; h_seq[g] = h
  // Geometric data has A_i >= 0; synthetic L satisfying the functional
  // equation can still produce negative counts. Flagged, not rejected.
  bool a_nonnegative = true;
};

// Build a profile from integer L coefficients (ascending).
// Errors: BadConstantTerm (L(0) != 1), GenusZero (constant L), OddDegree,
// FunctionalEquationViolation, InconsistentCounts (h <= 0).
FunctionFieldProfile profile_from_lpoly(const std::vector<Int>& coeffs,
                                        const Int& q);

// Build a profile from rational point counts N_1..N_g: recover
// sum S_s t^s/s = log(L) with S_s = N_s - 1 - q^s, solve the exp recurrence
// for the lower half of L, and fill the upper half from the functional
// equation. Errors: InconsistentCounts (non-integer coefficients or h <= 0),
// GenusZero (empty input).
FunctionFieldProfile profile_from_point_counts(const std::vector<Int>& counts,
                                               const Int& q);

// One genus-reduction step: (L - L(1) t^g) / ((1-t)(1-qt)), exactly.
// InexactDivision signals a precondition (functional-equation) violation.
RationalPoly reduce_genus(const RationalPoly& L, const Int& q, int g);

// The unique h_0..h_g with L = sum_i h_i t^i ((1-t)(1-qt))^{g-i}, read off
// by iterating reduce_genus (h_i = value of the i-th reduction at t = 1).
// The round trip back to L is verified. Errors propagate from reduce_genus.
std::vector<Rat> h_decomposition(const RationalPoly& L, const Int& q, int g);

// Closed form for the reduced polynomial:
// D_F = sum_{i=0}^{g-2} A_i (t^i + q^{g-1-i} t^{2g-2-i}) + A_{g-1} t^{g-1}.
// Verified against (1-t)(1-qt) D_F + h t^g = L (ConsistencyFailure).
RationalPoly duursma_reduced_ff(const FunctionFieldProfile& profile);

// Effective-divisor generating coefficients B_0..B_count of
// D_F/((1-t)(1-qt)), computed by the piecewise closed forms
//   i <= g-1:          B_i = sum_{j<=i} A_j (q^{i-j+1}-1)/(q-1)
//   g <= i <= 2g-3:    the closed form above extended over j <= g-1 plus
//                      sum_{j=g}^{i} A_{2g-2-j} (q^{i-g+2}-q^{j-g+1})/(q-1)
//   i >= 2g-2:         B_i = D_F(1) (q^{i-g+2}-1)/(q-1)
// and cross-checked clause against clause and against the series expansion
// (internal ConsistencyFailure on any mismatch).
std::vector<Int> b_sequence(const FunctionFieldProfile& profile, int count);

// Outcome of the fold/tail relation battery; `index`/`relation` identify
// the first failing identity when ok is false.
struct RelationsCheck {
  bool ok = true;
  int index = -1;
  std::string relation;
  explicit operator bool() const { return ok; }
};

// Check the fold relation B_i = q^{i-g+2} B_{2g-4-i} + D_F(1) geom(i-g+2)
// on g-1 <= i <= 2g-4 and the geometric tail B_i = D_F(1) geom(i-g+2) for
// i >= 2g-3, on a supplied B vector; then the analogous A-level relations
// (fold on g <= j <= 2g-2 with factor h, tail for j >= 2g-1) against the
// series of L/((1-t)(1-qt)).
RelationsCheck b_relations_on(const FunctionFieldProfile& profile,
                              const std::vector<Int>& b);

// b_relations_on applied to b_sequence(profile, count).
RelationsCheck b_relations_check(const FunctionFieldProfile& profile,
                                 int count);

// Exact check of (sqrt(q)-1)^{2g} <= h <= (sqrt(q)+1)^{2g}.
bool class_number_bounds(const FunctionFieldProfile& profile);

// Genus-0 cross-check between the two zeta worlds: build the Reed-Solomon
// [n, m+1, n-m] code by evaluating polynomials of degree <= m at n distinct
// points of GF(q), derive its zeta polynomial, and confirm it equals the
// L-polynomial of the rational function field (both are 1).
// Errors: ConstructionFailure (m, n out of range or n > q).
bool genus0_ag_identity(const Int& q, int n, int m,
                        uint64_t budget = 1ull << 24);

}  // namespace zetacode
