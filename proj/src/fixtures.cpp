#include "zetacode/fixtures.hpp"

#include <algorithm>
#include <random>

#include "zetacode/errors.hpp"

namespace zetacode {

namespace {

using Matrix = std::vector<std::vector<uint32_t>>;

LinearCode binary_code(Matrix rows) {
  return LinearCode(FieldSpec::make(2, 1), std::move(rows));
}

// Systematic [I | A] generators. The Golay block is a bordered circulant:
// first row 0 1...1, the rest 1 followed by cyclic shifts of 11011100010.
const Matrix kHamming74 = {
    {1, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 1, 0, 1},
    {0, 0, 1, 0, 1, 1, 0},
    {0, 0, 0, 1, 1, 1, 1},
};
const Matrix kExtHamming84 = {
    {1, 0, 0, 0, 0, 1, 1, 1},
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 0, 1, 0, 1, 1, 0, 1},
    {0, 0, 0, 1, 1, 1, 1, 0},
};
const Matrix kGolayBlock = {
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0},
    {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1},
    {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
    {1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0},
    {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
    {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1},
    {1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
    {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0},
    {1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0},
    {1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0},
    {1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1},
};
const Matrix kSimplex73 = {
    {1, 0, 1, 0, 1, 0, 1},
    {0, 1, 1, 0, 0, 1, 1},
    {0, 0, 0, 1, 1, 1, 1},
};
const Matrix kTetracode = {
    {1, 0, 1, 1},
    {0, 1, 1, 2},
};

Matrix with_identity(const Matrix& block) {
  size_t k = block.size();
  Matrix rows(k);
  for (size_t i = 0; i < k; ++i) {
    rows[i].assign(k + block[i].size(), 0);
    rows[i][i] = 1;
    for (size_t j = 0; j < block[i].size(); ++j)
      rows[i][k + j] = block[i][j];
  }
  return rows;
}

}  // namespace

LinearCode reed_solomon_code(uint64_t q, int n, int k) {
  if (k < 1 || k > n || static_cast<uint64_t>(n) > q)
    fail_validation("ConstructionFailure",
                    "Reed-Solomon needs 1 <= k <= n <= q");
  FieldRef field = field_of_size(q);
  Matrix rows(static_cast<size_t>(k),
              std::vector<uint32_t>(static_cast<size_t>(n)));
  for (int j = 0; j < n; ++j) {
    uint32_t point = static_cast<uint32_t>(j);
    uint32_t power = 1;
    for (int i = 0; i < k; ++i) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = power;
      power = field->mul(power, point);
    }
  }
  return LinearCode(field, std::move(rows));
}

LinearCode full_space_code(uint64_t q, int n) {
  if (n < 1) fail_validation("RangeError", "need n >= 1");
  FieldRef field = field_of_size(q);
  Matrix rows(static_cast<size_t>(n),
              std::vector<uint32_t>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return LinearCode(field, std::move(rows));
}

LinearCode random_code(uint64_t q, int n, int k, uint64_t seed) {
  if (n < 1 || k < 1) fail_validation("RangeError", "need n, k >= 1");
  if (k > n) fail_validation("RangeError", "k > n: more rows than length");
  FieldRef field = field_of_size(q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick(
      0, static_cast<uint32_t>(q - 1));
  for (;;) {
    Matrix rows(static_cast<size_t>(k),
                std::vector<uint32_t>(static_cast<size_t>(n)));
    std::vector<bool> column_hit(static_cast<size_t>(n), false);
    for (auto& row : rows)
      for (size_t j = 0; j < row.size(); ++j) {
        row[j] = pick(rng);
        if (row[j] != 0) column_hit[j] = true;
      }
    if (std::find(column_hit.begin(), column_hit.end(), false) !=
        column_hit.end())
      continue;  // zero column: not a valid instance, redraw
    LinearCode code(field, std::move(rows));
    if (!code.rank_reduced()) return code;
  }
}

LinearCode fixture_code(const std::string& name, uint64_t q, int n, int k) {
  if (name == "hamming74") return binary_code(kHamming74);
  if (name == "ext_hamming84") return binary_code(kExtHamming84);
  if (name == "golay24") return binary_code(with_identity(kGolayBlock));
  if (name == "simplex73") return binary_code(kSimplex73);
  if (name == "tetracode") return LinearCode(FieldSpec::make(3, 1), kTetracode);
  if (name == "rs") return reed_solomon_code(q, n, k);
  if (name == "full") return full_space_code(q, n);
  fail_validation("RangeError", "unknown fixture '" + name + "'");
}

}  // namespace zetacode
