#include "zetacode/code.hpp"

#include <algorithm>

#include "zetacode/errors.hpp"

namespace zetacode {

namespace {

// In-place reduced row echelon form over the field; returns pivot columns.
std::vector<int> rref(const FieldSpec& f,
                      std::vector<std::vector<uint32_t>>& rows) {
  int m = static_cast<int>(rows.size());
  int n = static_cast<int>(rows[0].size());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    for (int i = row; i < m; ++i) {
      if (rows[i][static_cast<size_t>(col)] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[static_cast<size_t>(row)], rows[static_cast<size_t>(sel)]);
    uint32_t inv = f.inv(rows[static_cast<size_t>(row)][static_cast<size_t>(col)]);
    for (int j = 0; j < n; ++j) {
      auto& c = rows[static_cast<size_t>(row)][static_cast<size_t>(j)];
      c = f.mul(c, inv);
    }
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      uint32_t factor = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& c = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        c = f.sub(c, f.mul(factor,
                           rows[static_cast<size_t>(row)][static_cast<size_t>(j)]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  rows.resize(static_cast<size_t>(row));
  return pivots;
}

}  // namespace

LinearCode::LinearCode(FieldRef field, std::vector<std::vector<uint32_t>> rows)
    : field_(std::move(field)) {
  if (!field_) fail_validation("EmptyMatrix", "generator needs a field");
  if (rows.empty() || rows[0].empty())
    fail_validation("EmptyMatrix", "generator matrix is empty");
  n_ = static_cast<int>(rows[0].size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_)
      fail_validation("LengthMismatch", "generator rows differ in length");
    for (uint32_t e : r) {
      if (e >= field_->q())
        fail_validation("RangeError", "generator entry outside the field");
    }
  }
  size_t given = rows.size();
  pivots_ = rref(*field_, rows);
  rref_ = std::move(rows);
  k_ = static_cast<int>(rref_.size());
  if (k_ == 0)
    fail_validation("EmptyMatrix", "generator matrix has rank zero");
  rank_reduced_ = static_cast<size_t>(k_) != given;
  for (int col = 0; col < n_; ++col) {
    bool nonzero = false;
    for (int i = 0; i < k_; ++i) {
      if (rref_[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero)
      fail_validation("ZeroColumn",
                      "code lies in a coordinate hyperplane (zero column)");
  }
}

WeightDistribution LinearCode::weight_distribution(uint64_t budget) const {
  const FieldSpec& f = *field_;
  uint64_t q = f.q();
  uint64_t total = 1;
  for (int i = 0; i < k_; ++i) {
    if (total > budget / q)
      fail_validation("BudgetExceeded", "q^k exceeds the enumeration budget");
    total *= q;
  }

  // Scaled generator rows: scaled[i][v] = v * row_i, so the recursion adds a
  // precomputed row per message digit.
  std::vector<std::vector<std::vector<uint32_t>>> scaled(
      static_cast<size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    scaled[static_cast<size_t>(i)].resize(q);
    for (uint64_t v = 0; v < q; ++v) {
      std::vector<uint32_t> r(static_cast<size_t>(n_));
      for (int j = 0; j < n_; ++j)
        r[static_cast<size_t>(j)] =
            f.mul(static_cast<uint32_t>(v),
                  rref_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      scaled[static_cast<size_t>(i)][v] = std::move(r);
    }
  }

  std::vector<Int> counts(static_cast<size_t>(n_) + 1, Int(0));
  std::vector<uint64_t> raw(static_cast<size_t>(n_) + 1, 0);
  std::vector<std::vector<uint32_t>> stack(
      static_cast<size_t>(k_) + 1, std::vector<uint32_t>(static_cast<size_t>(n_), 0));

  const bool xor_add = f.p() == 2;
  // Depth-first over message digits; stack[depth] holds the partial sum.
  std::vector<uint64_t> digit(static_cast<size_t>(k_), 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == k_) {
      const auto& word = stack[static_cast<size_t>(depth)];
      int w = 0;
      for (int j = 0; j < n_; ++j)
        w += word[static_cast<size_t>(j)] != 0;
      ++raw[static_cast<size_t>(w)];
      --depth;
      continue;
    }
    uint64_t v = digit[static_cast<size_t>(depth)];
    if (v == q) {
      digit[static_cast<size_t>(depth)] = 0;
      --depth;
      continue;
    }
    digit[static_cast<size_t>(depth)] = v + 1;
    const auto& prev = stack[static_cast<size_t>(depth)];
    auto& next = stack[static_cast<size_t>(depth) + 1];
    const auto& add_row = scaled[static_cast<size_t>(depth)][v];
    if (xor_add) {
      for (int j = 0; j < n_; ++j)
        next[static_cast<size_t>(j)] =
            prev[static_cast<size_t>(j)] ^ add_row[static_cast<size_t>(j)];
    } else {
      for (int j = 0; j < n_; ++j)
        next[static_cast<size_t>(j)] =
            f.add(prev[static_cast<size_t>(j)], add_row[static_cast<size_t>(j)]);
    }
    ++depth;
    // Note: when re-entering this depth the digit counter resumes at v+1.
  }

  for (int w = 0; w <= n_; ++w)
    counts[static_cast<size_t>(w)] = Int(static_cast<unsigned long>(raw[static_cast<size_t>(w)]));

  WeightDistribution out;
  out.n = n_;
  out.k = k_;
  out.q = f.q();
  out.counts = std::move(counts);
  validate_distribution(out);
  return out;
}

int LinearCode::min_distance(uint64_t budget) const {
  WeightDistribution w = weight_distribution(budget);
  return min_positive_weight(w);
}

LinearCode LinearCode::dual_code() const {
  if (k_ == n_)
    fail_validation("TrivialDual", "dual of the full space is the zero code");
  const FieldSpec& f = *field_;
  // Null space of the RREF generator: one basis vector per free column.
  std::vector<bool> is_pivot(static_cast<size_t>(n_), false);
  for (int c : pivots_) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (int fc = 0; fc < n_; ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    std::vector<uint32_t> v(static_cast<size_t>(n_), 0);
    v[static_cast<size_t>(fc)] = 1;
    for (int i = 0; i < k_; ++i)
      v[static_cast<size_t>(pivots_[static_cast<size_t>(i)])] =
          f.neg(rref_[static_cast<size_t>(i)][static_cast<size_t>(fc)]);
    basis.push_back(std::move(v));
  }
  return LinearCode(field_, std::move(basis));
}

CodeProfile LinearCode::profile(uint64_t budget) const {
  return profile_from_distribution(weight_distribution(budget));
}

CodeProfile profile_from_distribution(const WeightDistribution& w) {
  WeightDistribution wd = macwilliams(w);
  CodeProfile p;
  p.n = w.n;
  p.k = w.k;
  p.q = w.q;
  p.d = min_positive_weight(w);
  p.g = p.n + 1 - p.k - p.d;
  p.k_dual = w.n - w.k;
  p.d_dual = min_positive_weight(wd);
  p.g_dual = p.k + 1 - p.d_dual;
  return p;
}

Int LinearCode::support_count(uint64_t budget) const {
  WeightDistribution w = weight_distribution(budget);
  int d = min_positive_weight(w);
  Int wd = w.counts[static_cast<size_t>(d)];
  Int qm1 = Int(static_cast<unsigned long>(field_->q())) - 1;
  if (qm1 == 0 || wd % qm1 != 0)
    fail_validation("DivisibilityViolation",
                    "W^(d) is not divisible by q - 1");
  return wd / qm1;
}

bool LinearCode::same_row_space(const LinearCode& other) const {
  if (!field_->same_field(*other.field_)) return false;
  // RREF is canonical for a row space.
  return n_ == other.n_ && k_ == other.k_ && rref_ == other.rref_;
}

WeightDistribution macwilliams(const WeightDistribution& w) {
  validate_distribution(w);
  int n = w.n;
  Int q = Int(static_cast<unsigned long>(w.q));
  Int qk = int_pow(q, static_cast<unsigned long>(w.k));
  std::vector<Int> out(static_cast<size_t>(n) + 1, Int(0));
  // Krawtchouk: K_v(x) = sum_j (-1)^j (q-1)^{v-j} C(x,j) C(n-x,v-j).
  for (int v = 0; v <= n; ++v) {
    Int acc = 0;
    for (int x = 0; x <= n; ++x) {
      const Int& wx = w.counts[static_cast<size_t>(x)];
      if (wx == 0) continue;
      Int kv = 0;
      for (int j = 0; j <= v; ++j) {
        Int term = binomial(x, j) * binomial(n - x, v - j) *
                   int_pow(q - 1, static_cast<unsigned long>(v - j));
        if (j % 2 == 0)
          kv += term;
        else
          kv -= term;
      }
      acc += wx * kv;
    }
    if (acc % qk != 0)
      fail_validation("NonIntegerResult",
                      "transform is not integral; distribution corrupted");
    out[static_cast<size_t>(v)] = acc / qk;
  }
  WeightDistribution res;
  res.n = n;
  res.k = n - w.k;
  res.q = w.q;
  res.counts = std::move(out);
  return res;
}

int min_positive_weight(const WeightDistribution& w) {
  for (int i = 1; i <= w.n; ++i)
    if (w.counts[static_cast<size_t>(i)] > 0) return i;
  return w.n + 1;
}

void validate_distribution(const WeightDistribution& w) {
  if (w.n < 1 || w.k < 0 || w.q < 2 ||
      w.counts.size() != static_cast<size_t>(w.n) + 1)
    fail_validation("InconsistentProfile", "malformed weight distribution");
  if (w.counts[0] != 1)
    fail_validation("InconsistentProfile", "W^(0) must be 1");
  Int sum = 0;
  Int qm1 = Int(static_cast<unsigned long>(w.q)) - 1;
  for (int i = 0; i <= w.n; ++i) {
    const Int& c = w.counts[static_cast<size_t>(i)];
    if (c < 0)
      fail_validation("InconsistentProfile", "negative weight count");
    if (i >= 1 && c % qm1 != 0)
      fail_validation("InconsistentProfile",
                      "weight count not divisible by q - 1");
    sum += c;
  }
  if (sum != int_pow(Int(static_cast<unsigned long>(w.q)),
                     static_cast<unsigned long>(w.k)))
    fail_validation("InconsistentProfile", "counts do not sum to q^k");
}

}  // namespace zetacode
