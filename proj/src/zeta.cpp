#include "zetacode/zeta.hpp"

#include "zetacode/errors.hpp"

namespace zetacode {

namespace {

Int q_of(const CodeProfile& p) { return Int(static_cast<unsigned long>(p.q)); }

void check_profile(const CodeProfile& p) {
  if (p.n < 1 || p.k < 1 || p.k > p.n || p.d < 1 || p.d > p.n + 1 || p.q < 2)
    fail_validation("InconsistentProfile", "malformed code profile");
  if (p.g != p.n + 1 - p.k - p.d || p.g_dual != p.k + 1 - p.d_dual ||
      p.k_dual != p.n - p.k)
    fail_validation("InconsistentProfile", "profile parameters disagree");
  if (p.g < 0 || p.g_dual < 0)
    fail_validation("InconsistentProfile", "negative genus");
  if ((p.g == 0) != (p.g_dual == 0))
    fail_validation("InconsistentProfile",
                    "genus zero on one side only (duals of MDS codes are MDS)");
}

void check_distribution_against_profile(const WeightDistribution& w,
                                        const CodeProfile& p) {
  check_profile(p);
  validate_distribution(w);
  if (w.n != p.n || w.k != p.k || w.q != p.q)
    fail_validation("InconsistentProfile",
                    "distribution and profile parameters differ");
  if (min_positive_weight(w) != p.d)
    fail_validation("InconsistentProfile",
                    "minimum distance disagrees with the profile");
}

}  // namespace

Int mds_weight(int n, int s, const Int& q, int w) {
  if (s < 1 || s > n || w < 0 || w > n || q < 2)
    fail_validation("RangeError", "mds_weight indices out of range");
  if (w < s) return 0;
  Int acc = 0;
  for (int i = 0; i <= w - s; ++i) {
    Int term = binomial(w, i) *
               (int_pow(q, static_cast<unsigned long>(w + 1 - s - i)) - 1);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return binomial(n, w) * acc;
}

DcResult dc_from_weights(const WeightDistribution& w, const CodeProfile& p) {
  check_distribution_against_profile(w, p);
  if (p.g == 0) return {RationalPoly::zero(), true};
  if (p.g_dual < 1)
    fail_validation("InconsistentProfile", "dual genus must be positive here");
  Int q = q_of(p);
  int r = p.r();
  int s0 = p.n + 1 - p.k;  // = d + g, the MDS correction threshold
  std::vector<Rat> c(static_cast<size_t>(r - 1), Rat(0));
  for (int i = 0; i <= r - 2; ++i) {
    Rat acc = 0;
    for (int ww = p.d; ww <= p.d + i; ++ww) {
      Rat v = Rat(w.counts[static_cast<size_t>(ww)]);
      if (ww >= s0) v -= Rat(mds_weight(p.n, s0, q, ww));
      acc += Rat(binomial(p.n - ww, p.n - p.d - i)) * v;
    }
    c[static_cast<size_t>(i)] =
        acc / (Rat(q - 1) * Rat(binomial(p.n, p.d + i)));
  }
  return {RationalPoly(std::move(c)), false};
}

std::vector<Rat> weights_from_dc_raw(const RationalPoly& d,
                                     const CodeProfile& p) {
  check_profile(p);
  int r = p.r();
  // The zero polynomial (MDS, r = 0) is always admissible.
  if (!d.is_zero() && d.degree() > r - 2)
    fail_validation("PreconditionViolation",
                    "reduced polynomial degree exceeds r - 2");
  Int q = q_of(p);
  int s0 = p.n + 1 - p.k;
  std::vector<Rat> out(static_cast<size_t>(p.n) + 1, Rat(0));
  out[0] = 1;
  for (int w = p.d; w <= p.n; ++w) {
    Rat acc = 0;
    int top = std::min(w - p.d, r - 2);
    for (int i = 0; i <= top; ++i) {
      Rat term = Rat(binomial(w, p.d + i)) * d.coeff(i);
      if ((w - p.d - i) % 2 != 0) term = -term;
      acc += term;
    }
    Rat val = Rat(q - 1) * Rat(binomial(p.n, w)) * acc;
    if (w >= s0) val += Rat(mds_weight(p.n, s0, q, w));
    out[static_cast<size_t>(w)] = val;
  }
  return out;
}

namespace {

WeightDistribution integralize(std::vector<Rat> vals, const CodeProfile& p) {
  std::vector<Int> counts;
  counts.reserve(vals.size());
  for (const Rat& v : vals) {
    if (!is_integral(v))
      fail_validation("NonIntegerWeight",
                      "reconstructed weight count is not an integer");
    if (v < 0)
      fail_validation("NegativeWeight",
                      "reconstructed weight count is negative");
    counts.push_back(to_integer(v));
  }
  WeightDistribution out;
  out.n = p.n;
  out.k = p.k;
  out.q = p.q;
  out.counts = std::move(counts);
  validate_distribution(out);
  return out;
}

}  // namespace

WeightDistribution weights_from_dc(const RationalPoly& d,
                                   const CodeProfile& p) {
  return integralize(weights_from_dc_raw(d, p), p);
}

RationalPoly zeta_from_dc(const RationalPoly& d, int g, const Int& q) {
  if (g < 0) fail_validation("RangeError", "negative genus");
  RationalPoly p =
      one_minus_t_one_minus_qt(q) * d + RationalPoly::monomial(Rat(1), g);
  if (p.evaluate(Rat(1)) != 1)
    fail_internal("NormalizationFailure", "P(1) != 1 after assembly");
  return p;
}

RationalPoly dc_from_zeta(const RationalPoly& p, int g, const Int& q) {
  if (g < 0) fail_validation("RangeError", "negative genus");
  RationalPoly numer = p - RationalPoly::monomial(Rat(1), g);
  return exact_divide(numer, one_minus_t_one_minus_qt(q));
}

std::vector<Rat> weights_from_zeta_gf_raw(const RationalPoly& p,
                                          const CodeProfile& profile) {
  check_profile(profile);
  if (p.degree() > profile.r())
    fail_validation("PreconditionViolation", "zeta degree exceeds r");
  Int q = q_of(profile);
  std::vector<Rat> out(static_cast<size_t>(profile.n) + 1, Rat(0));
  out[0] = 1;
  RationalPoly one_minus_t{Rat(1), Rat(-1)};
  RationalPoly denom{Rat(1), Rat(-q)};
  RationalPoly pw = RationalPoly::constant(Rat(1));  // (1-t)^{s-1}
  for (int s = 1; s <= profile.n; ++s) {
    if (s >= profile.d) {
      TruncatedSeries ser = series_div(pw * p, denom, s - profile.d);
      out[static_cast<size_t>(s)] = Rat(q - 1) *
                                    Rat(binomial(profile.n, s)) *
                                    ser.coeffs[static_cast<size_t>(s - profile.d)];
    }
    pw = pw * one_minus_t;
  }
  return out;
}

WeightDistribution weights_from_zeta_gf(const RationalPoly& p,
                                        const CodeProfile& profile) {
  return integralize(weights_from_zeta_gf_raw(p, profile), profile);
}

std::vector<Rat> mds_decomposition(const WeightDistribution& w,
                                   const CodeProfile& p) {
  check_distribution_against_profile(w, p);
  Int q = q_of(p);
  int r = p.r();
  std::vector<Rat> a(static_cast<size_t>(r) + 1, Rat(0));
  // Triangular solve: row w = d+j involves only a_0..a_j because
  // M_{n,d+i}^{(w)} = 0 for w < d+i.
  for (int j = 0; j <= r; ++j) {
    int ww = p.d + j;
    if (ww > p.n)
      fail_internal("SingularSystem",
                    "triangular rows run past n (impossible for valid profiles)");
    Rat acc = Rat(w.counts[static_cast<size_t>(ww)]);
    for (int i = 0; i < j; ++i)
      acc -= a[static_cast<size_t>(i)] * Rat(mds_weight(p.n, p.d + i, q, ww));
    Int pivot = mds_weight(p.n, ww, q, ww);  // C(n,w)(q-1), never 0 for w <= n
    if (pivot == 0)
      fail_internal("SingularSystem", "zero pivot in the triangular system");
    a[static_cast<size_t>(j)] = acc / Rat(pivot);
  }
  // Remaining rows must agree with the decomposition.
  for (int ww = p.d + r + 1; ww <= p.n; ++ww) {
    Rat acc = 0;
    for (int i = 0; i <= r; ++i)
      acc += a[static_cast<size_t>(i)] * Rat(mds_weight(p.n, p.d + i, q, ww));
    if (acc != Rat(w.counts[static_cast<size_t>(ww)]))
      fail_validation("InconsistentProfile",
                      "distribution is not an MDS-enumerator combination for "
                      "this profile");
  }
  Rat sum = 0;
  for (const Rat& ai : a) sum += ai;
  if (sum != 1)
    fail_validation("NormalizationFailure",
                    "decomposition coefficients do not sum to 1");
  return a;
}

Rat binomial_kernel(int A, int B, int v) {
  if (v < B || v > A + B) return Rat(0);
  Rat c = Rat(binomial(A, v - B));
  return (v - B) % 2 == 0 ? c : -c;
}

WeightDistribution reconstruct_general(const std::vector<Int>& low_weights,
                                       const CodeProfile& p) {
  check_profile(p);
  int r = p.r();
  if (r == 1)
    fail_validation("PreconditionViolation",
                    "r = 1 cannot arise from a code (duals of MDS are MDS)");
  int hi = p.d + r - 2;  // highest weight consumed
  if (static_cast<int>(low_weights.size()) != std::max(r - 1, 0))
    fail_validation("LengthMismatch",
                    "need exactly the counts W^(d)..W^(d+r-2)");
  Int q = q_of(p);
  int s0 = p.n + 1 - p.k;  // = d + g

  // lambda_w at y-degree v: sum_{s=w}^{hi} C(n-w, n-s) * [(x-y)^{n-s} y^s]_v.
  auto lambda = [&](int w, int v) -> Rat {
    Rat acc = 0;
    for (int s = w; s <= hi; ++s)
      acc += Rat(binomial(p.n - w, p.n - s)) * binomial_kernel(p.n - s, s, v);
    return acc;
  };

  std::vector<Rat> vals(static_cast<size_t>(p.n) + 1, Rat(0));
  for (int v = 0; v <= p.n; ++v) {
    // Explicit remainder: the MDS enumerator minus its own lambda-projection.
    Rat acc = v == 0 ? Rat(1) : Rat(mds_weight(p.n, s0, q, v));
    for (int w = s0; w <= hi; ++w)
      acc -= Rat(mds_weight(p.n, s0, q, w)) * lambda(w, v);
    for (int w = p.d; w <= hi; ++w)
      acc += Rat(low_weights[static_cast<size_t>(w - p.d)]) * lambda(w, v);
    vals[static_cast<size_t>(v)] = acc;
  }
  return integralize(std::move(vals), p);
}

ZetaProfile build_zeta_profile(const WeightDistribution& w,
                               const CodeProfile& p) {
  ZetaProfile out;
  out.profile = p;
  out.r = p.r();
  DcResult dc = dc_from_weights(w, p);
  out.D = dc.d;
  out.mds = dc.mds_input;
  Int q = q_of(p);
  out.P = zeta_from_dc(out.D, p.g, q);
  out.a = mds_decomposition(w, p);
  if (out.P.degree() > out.r)
    fail_internal("ConsistencyFailure", "zeta degree exceeds r");

  // The triangular decomposition must equal the zeta coefficients.
  for (int i = 0; i <= out.r; ++i) {
    if (out.a[static_cast<size_t>(i)] != out.P.coeff(i))
      fail_internal("ConsistencyFailure",
                    "MDS decomposition disagrees with the zeta polynomial");
  }

  out.c.assign(static_cast<size_t>(std::max(out.r - 1, 0)), Rat(0));
  for (int i = 0; i <= out.r - 2; ++i)
    out.c[static_cast<size_t>(i)] = out.D.coeff(i);

  // Integrality (q-1) C(n, d+i) c_i and the 0 < c_0 < 1 window for g >= 1.
  for (int i = 0; i <= out.r - 2; ++i) {
    Rat scaled = Rat(q - 1) * Rat(binomial(p.n, p.d + i)) *
                 out.c[static_cast<size_t>(i)];
    if (!is_integral(scaled))
      fail_validation("InconsistentProfile",
                      "(q-1) C(n,d+i) c_i is not an integer");
  }
  if (p.g >= 1) {
    if (!(out.c[0] > 0 && out.c[0] < 1))
      fail_validation("InconsistentProfile", "c_0 must lie in (0, 1)");
  }
  return out;
}

}  // namespace zetacode
