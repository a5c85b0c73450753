#include "zetacode/funcfield.hpp"

#include <algorithm>

#include "zetacode/code.hpp"
#include "zetacode/errors.hpp"
#include "zetacode/field.hpp"
#include "zetacode/quadring.hpp"
#include "zetacode/zeta.hpp"

namespace zetacode {

namespace {

// Functional equation L(t) = L(1/(qt)) q^g t^{2g}.
bool satisfies_functional_equation(const RationalPoly& l, const Int& q,
                                   int g) {
  return q_reciprocal_transform(l, q, g, 2 * g) == l;
}

Int rat_to_int_checked(const Rat& v, const char* what) {
  if (!is_integral(v))
    fail_internal("ConsistencyFailure",
                  std::string(what) + " produced a non-integer");
  return to_integer(v);
}

}  // namespace

RationalPoly reduce_genus(const RationalPoly& L, const Int& q, int g) {
  if (g < 1) fail_validation("GenusZero", "nothing to reduce at genus 0");
  RationalPoly shifted = L - RationalPoly::monomial(L.evaluate(Rat(1)), g);
  return exact_divide(shifted, one_minus_t_one_minus_qt(q));
}

std::vector<Rat> h_decomposition(const RationalPoly& L, const Int& q, int g) {
  if (g < 0) fail_validation("RangeError", "negative genus");
  std::vector<Rat> h(static_cast<size_t>(g) + 1);
  RationalPoly cur = L;
  for (int i = g; i >= 0; --i) {
    h[static_cast<size_t>(i)] = cur.evaluate(Rat(1));
    if (i > 0) cur = reduce_genus(cur, q, i);
  }
  // Round trip: sum h_i t^i ((1-t)(1-qt))^{g-i} must reassemble L.
  RationalPoly rebuilt;
  RationalPoly denom_pow = RationalPoly::constant(Rat(1));
  for (int i = g; i >= 0; --i) {
    rebuilt =
        rebuilt + RationalPoly::monomial(h[static_cast<size_t>(i)], i) *
                      denom_pow;
    denom_pow = denom_pow * one_minus_t_one_minus_qt(q);
  }
  if (rebuilt != L)
    fail_internal("ConsistencyFailure",
                  "h-decomposition does not reassemble L");
  return h;
}

RationalPoly duursma_reduced_ff(const FunctionFieldProfile& profile) {
  int g = profile.g;
  const Int& q = profile.q;
  RationalPoly d;
  for (int i = 0; i <= g - 2; ++i) {
    Rat ai(profile.A[static_cast<size_t>(i)]);
    d = d + RationalPoly::monomial(ai, i) +
        RationalPoly::monomial(
            ai * Rat(int_pow(q, static_cast<unsigned long>(g - 1 - i))),
            2 * g - 2 - i);
  }
  d = d + RationalPoly::monomial(Rat(profile.A[static_cast<size_t>(g - 1)]),
                                 g - 1);
  RationalPoly reassembled = one_minus_t_one_minus_qt(q) * d +
                             RationalPoly::monomial(Rat(profile.h), g);
  if (reassembled != profile.L)
    fail_internal("ConsistencyFailure",
                  "(1-t)(1-qt) D_F + h t^g does not reproduce L");
  return d;
}

FunctionFieldProfile profile_from_lpoly(const std::vector<Int>& coeffs,
                                        const Int& q) {
  if (q < 2) fail_validation("RangeError", "need q >= 2");
  std::vector<Rat> as_rat(coeffs.begin(), coeffs.end());
  RationalPoly l(std::move(as_rat));
  if (l.is_zero() || l.coeff(0) != 1)
    fail_validation("BadConstantTerm", "L(0) must be 1");
  int deg = l.degree();
  if (deg == 0)
    fail_validation("GenusZero", "constant L has genus 0; nothing to build");
  if (deg % 2 != 0)
    fail_validation("OddDegree", "deg L must be even (2g)");
  int g = deg / 2;
  if (!satisfies_functional_equation(l, q, g))
    fail_validation("FunctionalEquationViolation",
                    "L(t) != L(1/(qt)) q^g t^{2g}");

  FunctionFieldProfile out;
  out.q = q;
  out.g = g;
  out.L = l;
  out.h = rat_to_int_checked(l.evaluate(Rat(1)), "class number");
  if (out.h <= 0)
    fail_validation("InconsistentCounts", "class number L(1) must be positive");

  TruncatedSeries a = series_div(l, one_minus_t_one_minus_qt(q), g - 1);
  out.A.reserve(static_cast<size_t>(g));
  for (const Rat& v : a.coeffs)
    out.A.push_back(rat_to_int_checked(v, "divisor count A_i"));
  out.a_nonnegative =
      std::all_of(out.A.begin(), out.A.end(), [](const Int& v) { return v >= 0; });

  out.D_F = duursma_reduced_ff(out);
  if (out.D_F != reduce_genus(l, q, g))
    fail_internal("ConsistencyFailure",
                  "closed-form D_F disagrees with the genus reduction");
  // D_F inherits the functional equation one genus down.
  if (g >= 1 && !out.D_F.is_zero() &&
      q_reciprocal_transform(out.D_F, q, g - 1, 2 * g - 2) != out.D_F)
    fail_internal("ConsistencyFailure",
                  "D_F violates the genus-(g-1) functional equation");

  out.h_seq = h_decomposition(l, q, g);
  if (out.h_seq[static_cast<size_t>(g)] != Rat(out.h))
    fail_internal("ConsistencyFailure", "h_seq top entry is not L(1)");
  return out;
}

FunctionFieldProfile profile_from_point_counts(const std::vector<Int>& counts,
                                               const Int& q) {
  if (counts.empty())
    fail_validation("GenusZero", "no point counts supplied (genus 0)");
  if (q < 2) fail_validation("RangeError", "need q >= 2");
  int g = static_cast<int>(counts.size());
  // S_s = N_s - 1 - q^s, then nu * b_nu = sum_{j=1}^{nu} S_j b_{nu-j}.
  std::vector<Rat> s(static_cast<size_t>(g) + 1);
  for (int j = 1; j <= g; ++j)
    s[static_cast<size_t>(j)] =
        Rat(counts[static_cast<size_t>(j - 1)] - 1 -
            int_pow(q, static_cast<unsigned long>(j)));
  std::vector<Rat> b(static_cast<size_t>(g) + 1);
  b[0] = 1;
  for (int nu = 1; nu <= g; ++nu) {
    Rat acc(0);
    for (int j = 1; j <= nu; ++j)
      acc += s[static_cast<size_t>(j)] * b[static_cast<size_t>(nu - j)];
    b[static_cast<size_t>(nu)] = acc / Rat(nu);
  }
  std::vector<Int> l(static_cast<size_t>(2 * g) + 1);
  for (int i = 0; i <= g; ++i) {
    if (!is_integral(b[static_cast<size_t>(i)]))
      fail_validation("InconsistentCounts",
                      "point counts give a non-integer L coefficient");
    l[static_cast<size_t>(i)] = to_integer(b[static_cast<size_t>(i)]);
  }
  // Upper half from the functional equation: b_{2g-i} = q^{g-i} b_i.
  for (int i = 0; i < g; ++i)
    l[static_cast<size_t>(2 * g - i)] =
        int_pow(q, static_cast<unsigned long>(g - i)) *
        l[static_cast<size_t>(i)];
  return profile_from_lpoly(l, q);
}

std::vector<Int> b_sequence(const FunctionFieldProfile& profile, int count) {
  if (count < 0) fail_validation("RangeError", "negative index bound");
  const Int& q = profile.q;
  int g = profile.g;
  TruncatedSeries series =
      series_div(profile.D_F, one_minus_t_one_minus_qt(q), count);

  // Series coefficients of L/((1-t)(1-qt)) extend A_i beyond the stored
  // half; the closed forms below consume them up to index g-1 only.
  auto a_at = [&](int j) { return Rat(profile.A[static_cast<size_t>(j)]); };
  Rat df1 = profile.D_F.evaluate(Rat(1));

  std::vector<Int> out(static_cast<size_t>(count) + 1);
  for (int i = 0; i <= count; ++i) {
    const Rat& from_series = series.coeffs[static_cast<size_t>(i)];
    bool covered = false;
    auto check_clause = [&](const Rat& value, const char* clause) {
      if (value != from_series)
        fail_internal("ConsistencyFailure",
                      std::string("closed form '") + clause +
                          "' disagrees with the series at index " +
                          std::to_string(i));
      covered = true;
    };
    if (i <= g - 1) {
      Rat acc(0);
      for (int j = 0; j <= i; ++j)
        acc += a_at(j) *
               Rat(geometric_sum(q, static_cast<unsigned long>(i - j + 1)));
      check_clause(acc, "head");
    }
    if (i >= g && i <= 2 * g - 3) {
      Rat acc(0);
      for (int j = 0; j <= g - 1; ++j)
        acc += a_at(j) *
               Rat(geometric_sum(q, static_cast<unsigned long>(i - j + 1)));
      Int qig2 = int_pow(q, static_cast<unsigned long>(i - g + 2));
      for (int j = g; j <= i; ++j) {
        Int qjg1 = int_pow(q, static_cast<unsigned long>(j - g + 1));
        acc += a_at(2 * g - 2 - j) * Rat(qig2 - qjg1) / Rat(q - 1);
      }
      check_clause(acc, "middle");
    }
    if (i >= 2 * g - 2) {
      check_clause(
          df1 * Rat(geometric_sum(q, static_cast<unsigned long>(i - g + 2))),
          "tail");
    }
    if (!covered)
      fail_internal("ConsistencyFailure",
                    "no closed-form clause covers index " + std::to_string(i));
    out[static_cast<size_t>(i)] = rat_to_int_checked(from_series, "B_i");
  }
  return out;
}

RelationsCheck b_relations_on(const FunctionFieldProfile& profile,
                              const std::vector<Int>& b) {
  const Int& q = profile.q;
  int g = profile.g;
  int count = static_cast<int>(b.size()) - 1;
  Rat df1 = profile.D_F.evaluate(Rat(1));
  RelationsCheck res;
  auto fail_at = [&](int idx, const char* rel) {
    res.ok = false;
    res.index = idx;
    res.relation = rel;
  };

  for (int i = 0; i <= count && res.ok; ++i) {
    Rat bi(b[static_cast<size_t>(i)]);
    if (i >= g - 1 && i <= 2 * g - 4) {
      // Fold: B_i = q^{i-g+2} B_{2g-4-i} + D_F(1) (q^{i-g+2}-1)/(q-1).
      Rat expect =
          Rat(int_pow(q, static_cast<unsigned long>(i - g + 2))) *
              Rat(b[static_cast<size_t>(2 * g - 4 - i)]) +
          df1 * Rat(geometric_sum(q, static_cast<unsigned long>(i - g + 2)));
      if (bi != expect) fail_at(i, "b_fold");
    }
    if (res.ok && i >= std::max(0, 2 * g - 3)) {
      Rat expect =
          df1 * Rat(geometric_sum(q, static_cast<unsigned long>(i - g + 2)));
      if (bi != expect) fail_at(i, "b_tail");
    }
  }
  if (!res.ok) return res;

  // A-level analogues against the series of L/((1-t)(1-qt)).
  int reach = std::max(count, 3 * g);
  TruncatedSeries a_series =
      series_div(profile.L, one_minus_t_one_minus_qt(q), reach);
  Rat h(profile.h);
  for (int j = 0; j <= reach && res.ok; ++j) {
    const Rat& aj = a_series.coeffs[static_cast<size_t>(j)];
    if (j >= g && j <= 2 * g - 2) {
      Rat expect =
          Rat(int_pow(q, static_cast<unsigned long>(j - g + 1))) *
              a_series.coeffs[static_cast<size_t>(2 * g - 2 - j)] +
          h * Rat(geometric_sum(q, static_cast<unsigned long>(j - g + 1)));
      if (aj != expect) fail_at(j, "a_fold");
    }
    if (res.ok && j >= 2 * g - 1) {
      Rat expect =
          h * Rat(geometric_sum(q, static_cast<unsigned long>(j - g + 1)));
      if (aj != expect) fail_at(j, "a_tail");
    }
  }
  return res;
}

RelationsCheck b_relations_check(const FunctionFieldProfile& profile,
                                 int count) {
  return b_relations_on(profile, b_sequence(profile, count));
}

bool class_number_bounds(const FunctionFieldProfile& profile) {
  QuadRingElement sq = QuadRingElement::sqrt_q(profile.q);
  QuadRingElement one(Rat(1), Rat(0), profile.q);
  QuadRingElement h(Rat(profile.h), Rat(0), profile.q);
  unsigned e = static_cast<unsigned>(2 * profile.g);
  return (sq - one).pow(e) <= h && h <= (sq + one).pow(e);
}

bool genus0_ag_identity(const Int& q, int n, int m, uint64_t budget) {
  if (n < 1 || m < 0 || m >= n)
    fail_validation("ConstructionFailure",
                    "evaluation code needs 0 <= m < n");
  if (Int(n) > q)
    fail_validation("ConstructionFailure",
                    "not enough distinct evaluation points (n > q)");
  if (!q.fits_ulong_p())
    fail_validation("UnsupportedSize", "field size is out of range");
  FieldRef field = field_of_size(q.get_ui());

  // Rows evaluate the monomials 1, x, ..., x^m at the first n field
  // elements (indices 0..n-1): a Vandermonde generator of [n, m+1, n-m].
  std::vector<std::vector<uint32_t>> rows(
      static_cast<size_t>(m) + 1, std::vector<uint32_t>(static_cast<size_t>(n)));
  for (int j = 0; j < n; ++j) {
    uint32_t point = static_cast<uint32_t>(j);
    uint32_t power = 1;
    for (int i = 0; i <= m; ++i) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = power;
      power = field->mul(power, point);
    }
  }
  LinearCode code(field, std::move(rows));
  WeightDistribution w = code.weight_distribution(budget);
  CodeProfile prof = profile_from_distribution(w);
  ZetaProfile zp = build_zeta_profile(w, prof);
  // The rational function field has L = 1; the code side must collapse to
  // the same constant (genus 0, MDS).
  return prof.g == 0 && zp.P == RationalPoly::constant(Rat(1));
}

}  // namespace zetacode
