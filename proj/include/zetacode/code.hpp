#pragma once

#include <cstdint>
#include <vector>

#include "zetacode/field.hpp"
#include "zetacode/rational.hpp"

namespace zetacode {

// W^(w) counts of codewords per Hamming weight, with context parameters.
struct WeightDistribution {
  int n = 0;
  int k = 0;
  uint32_t q = 0;
  std::vector<Int> counts;  // indexed 0..n
};

// Derived parameters: genus g = n+1-k-d measures the Singleton defect;
// g = 0 exactly for MDS codes. Dual-side values use the MacWilliams
// transform of the primal distribution (no dual enumeration needed).
struct CodeProfile {
  int n = 0;
  int k = 0;
  int d = 0;
  int g = 0;
  int k_dual = 0;
  int d_dual = 0;  // n+1 when the dual is the zero code (k = n)
  int g_dual = 0;
  uint32_t q = 0;
  int r() const { return g + g_dual; }
};

// A linear [n, k] code held as a reduced-row-echelon generator matrix of raw
// field-element indices. Construction rejects codes lying in a coordinate
// hyperplane (zero column) — the standing hypothesis of every weight/zeta
// identity in this library.
class LinearCode {
 public:
  // rows: candidate generator rows (IDs of field elements). Rank-deficient
  // input is reduced to a row-space basis with rank_reduced() set.
  LinearCode(FieldRef field, std::vector<std::vector<uint32_t>> rows);

  const FieldRef& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  bool rank_reduced() const { return rank_reduced_; }
  const std::vector<std::vector<uint32_t>>& generator() const { return rref_; }

  // Exhaustive weight distribution; q^k must stay within budget
  // (BudgetExceeded). Deterministic.
  WeightDistribution weight_distribution(uint64_t budget = 1ull << 20) const;
  int min_distance(uint64_t budget = 1ull << 20) const;

  // Null-space code; the dual of the full space is the zero code and is
  // rejected (TrivialDual).
  LinearCode dual_code() const;

  // Full profile (enumerates the primal side only).
  CodeProfile profile(uint64_t budget = 1ull << 20) const;

  // nu = W^(d)/(q-1): number of minimal-weight supports times the number of
  // projective representatives; exact division or DivisibilityViolation.
  Int support_count(uint64_t budget = 1ull << 20) const;

  // Do the two generators span the same row space?
  bool same_row_space(const LinearCode& other) const;

 private:
  FieldRef field_;
  int n_ = 0;
  int k_ = 0;
  bool rank_reduced_ = false;
  std::vector<std::vector<uint32_t>> rref_;
  std::vector<int> pivots_;
};

// Profile fields read off an existing distribution (dual side via the
// MacWilliams transform) — saves re-enumeration when W is already at hand.
CodeProfile profile_from_distribution(const WeightDistribution& w);

// MacWilliams transform: the dual's distribution from the primal's,
// W_dual(x, y) = q^{-k} W(x + (q-1) y, x - y), computed exactly on weight
// counts via Krawtchouk sums. NonIntegerResult flags a corrupted input.
WeightDistribution macwilliams(const WeightDistribution& w);

// d and d_dual read off a distribution (n+1 when no positive-weight word).
int min_positive_weight(const WeightDistribution& w);

// Validation shared by consumers: counts[0] = 1, non-negative entries,
// sum q^k, (q-1) | counts[w] for w >= 1.
void validate_distribution(const WeightDistribution& w);

}  // namespace zetacode
