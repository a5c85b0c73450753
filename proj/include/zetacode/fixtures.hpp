#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetacode/code.hpp"
#include "zetacode/field.hpp"

namespace zetacode {

// Built-in reference codes with hand-checked parameters. Names:
// hamming74, ext_hamming84, golay24, simplex73, tetracode, plus the
// parametric families rs (q, n, k) and full (q, n). Unknown names are a
// validation error (RangeError).
LinearCode fixture_code(const std::string& name, uint64_t q = 0, int n = 0,
                        int k = 0);

// Reed-Solomon [n, k, n-k+1]: evaluate polynomials of degree < k at the
// first n elements of GF(q). Needs 1 <= k <= n <= q (ConstructionFailure).
LinearCode reed_solomon_code(uint64_t q, int n, int k);

// The full space [n, n, 1] over GF(q) (identity generator).
LinearCode full_space_code(uint64_t q, int n);

// Seeded uniform generator matrix, redrawn until it has rank k and no zero
// column. Deterministic per (q, n, k, seed). RangeError on k > n or
// non-positive dimensions.
LinearCode random_code(uint64_t q, int n, int k, uint64_t seed);

}  // namespace zetacode
