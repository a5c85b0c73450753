#pragma once

#include <vector>

#include "zetacode/zeta.hpp"

namespace zetacode {

// One boolean per formal-self-duality condition. The equivalences among
// them presuppose n = 2k and d = d_dual; the report keeps every condition
// visible so parameter mismatches (e.g. Hamming [7,4,3]: zeta fixed point
// without weight equality) stay observable instead of collapsing into one
// verdict.
struct FsdReport {
  bool parameter_preconditions = false;  // n = 2k, d = d_dual, g = g_dual
  bool weight_equal = false;             // W_C = W_{C_dual} componentwise
  bool zeta_fixed = false;               // P(t) = P(1/(qt)) q^g t^{2g}
  bool d_fixed = false;                  // D(t) = D(1/(qt)) q^{g-1} t^{2g-2}
  bool coeff_relations = false;          // c_{g-1+i} = q^i c_{g-1-i}
  bool reconstruction_from_half = false;
  bool reconstruction_from_low_weights = false;
  // parameter echo
  int n = 0, k = 0, d = 0, d_dual = 0, g = 0, g_dual = 0;
  uint32_t q = 0;

  bool all_equivalent_conditions_true() const {
    return weight_equal && zeta_fixed && d_fixed && coeff_relations &&
           reconstruction_from_half && reconstruction_from_low_weights;
  }
};

// Componentwise equality of two distributions of the same length.
bool check_fsd_definition(const WeightDistribution& wc,
                          const WeightDistribution& wdual);

// Exact fixed-point tests of the functional equation at zeta / reduced level.
bool check_zeta_functional(const RationalPoly& p, const Int& q, int g);
bool check_d_functional(const RationalPoly& d, const Int& q, int g);

// Coefficient form c_{g-1+i} = q^i c_{g-1-i}; coefficients beyond the stored
// degree count as zero, and indices past 2g-2 must vanish.
bool check_coeff_relations(const RationalPoly& d, const Int& q, int g);

// Full distribution from the lower half c_0..c_{g-1} of the reduced
// polynomial of a formally self-dual code:
// W = M_{2k,k+1} + sum_j c_{g-1-j} w_j with
//   w_0 = (q-1) C(2k,k) (x-y)^k y^k,
//   w_j = (q-1) C(2k,k+j) [(x-y)^{k+j} y^{k-j} + q^j (x-y)^{k-j} y^{k+j}].
WeightDistribution fsd_reconstruct_from_half(const std::vector<Rat>& c_low,
                                             const CodeProfile& p);

// Full distribution from the counts W^(d)..W^(k) alone:
// W = M_{2k,k+1} + sum_{w=d}^{k-1} W^(w) phi_w + W^(k) (x-y)^k y^k with
// phi_w = sum_{s=w}^{k-1} C(2k-w, s-w) [(x-y)^{2k-s} y^s
//          + q^{k-s} (x-y)^s y^{2k-s}] + C(2k-w, k) (x-y)^k y^k.
WeightDistribution fsd_reconstruct_from_low_weights(
    const std::vector<Int>& low, const CodeProfile& p);

// Runs the whole battery. Reconstruction conditions compare against the
// observed distribution; with genus 0 both reduce to W = M_{2k,k+1}
// (empty correction sums), which is checked directly.
FsdReport build_fsd_report(const WeightDistribution& w,
                           const WeightDistribution& wdual,
                           const ZetaProfile& zp);

}  // namespace zetacode
