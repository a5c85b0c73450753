#include "zetacode/rha.hpp"

#include <algorithm>
#include <cmath>

#include "zetacode/errors.hpp"

namespace zetacode {

const char* rha_method_name(RhaMethod m) {
  switch (m) {
    case RhaMethod::OddDegreeReject: return "OddDegreeReject";
    case RhaMethod::ReciprocityReject: return "ReciprocityReject";
    case RhaMethod::ExactSturm: return "ExactSturm";
    case RhaMethod::ClosedFormDeg2: return "ClosedFormDeg2";
    case RhaMethod::ClosedFormDeg4: return "ClosedFormDeg4";
    case RhaMethod::Degenerate: return "Degenerate";
  }
  return "?";
}

std::vector<std::complex<double>> approximate_roots(const RationalPoly& p) {
  RationalPoly sf = squarefree_part(p);
  int n = sf.degree();
  if (n <= 0) return {};
  std::vector<std::complex<double>> a(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    a[static_cast<size_t>(i)] = sf.coeff(i).get_d();
  for (auto& c : a) c /= a.back();

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + a[static_cast<size_t>(i)];
    return acc;
  };

  std::vector<std::complex<double>> roots(static_cast<size_t>(n));
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> cur(1.0, 0.0);
  for (auto& r : roots) {
    cur *= seed;
    r = cur;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (size_t i = 0; i < roots.size(); ++i) {
      std::complex<double> denom(1.0, 0.0);
      for (size_t j = 0; j < roots.size(); ++j)
        if (j != i) denom *= roots[i] - roots[j];
      std::complex<double> delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-14) break;
  }
  return roots;
}

namespace {

std::vector<RhaVerdict::RootDiagnostic> diagnostics_for(
    const RationalPoly& p, const Int& q) {
  std::vector<RhaVerdict::RootDiagnostic> out;
  double sq = std::sqrt(Rat(q).get_d());
  for (const auto& z : approximate_roots(p))
    out.push_back({z, std::abs(std::abs(z) * sq - 1.0)});
  return out;
}

// True when a_{r-i} = q^{m-i} a_i for all i (r even, m = r/2).
bool is_self_q_reciprocal(const RationalPoly& p, const Int& q, int m) {
  int r = p.degree();
  for (int i = 0; i <= r; ++i) {
    int e = m - i;
    Rat factor = e >= 0
                     ? Rat(int_pow(q, static_cast<unsigned long>(e)))
                     : Rat(1) / Rat(int_pow(q, static_cast<unsigned long>(-e)));
    if (p.coeff(r - i) != factor * p.coeff(i)) return false;
  }
  return true;
}

}  // namespace

RhaVerdict rha_check(const RationalPoly& p, const Int& q) {
  if (p.is_zero())
    fail_validation("ZeroPolynomial", "the zero polynomial has no verdict");
  RhaVerdict v;
  v.root_diagnostics = diagnostics_for(p, q);

  int r = p.degree();
  if (r == 0) {
    v.holds = true;
    v.method = RhaMethod::Degenerate;
    return v;
  }
  if (r % 2 != 0) {
    v.holds = false;
    v.method = RhaMethod::OddDegreeReject;
    return v;
  }
  int m = r / 2;
  if (!is_self_q_reciprocal(p, q, m)) {
    v.holds = false;
    v.method = RhaMethod::ReciprocityReject;
    return v;
  }

  // u = 1/t + qt maps the circle |t| = 1/sqrt(q) onto the real segment
  // [-2 sqrt(q), 2 sqrt(q)]. With v_j = t^{-j} + q^j t^j (v_0 = 2, v_1 = u,
  // v_{j+1} = u v_j - q v_{j-1}), reciprocity gives
  // P(t)/t^m = a_m + sum_{j=1}^m a_{m-j} v_j, a degree-m polynomial in u.
  RationalPoly u_poly{Rat(0), Rat(1)};
  RationalPoly v_prev = RationalPoly::constant(Rat(2));
  RationalPoly v_cur = u_poly;
  RationalPoly g = RationalPoly::constant(p.coeff(m));
  for (int j = 1; j <= m; ++j) {
    g = g + v_cur * p.coeff(m - j);
    if (j < m) {
      RationalPoly v_next = u_poly * v_cur - v_prev * Rat(q);
      v_prev = v_cur;
      v_cur = v_next;
    }
  }
  g = g * (Rat(1) / p.coeff(0));  // normalized as P(t)/(a_0 t^m)
  v.certificate_g = g;

  // G2(s) with G2(u^2) = (-1)^m G(u) G(-u): even part of the product.
  RationalPoly g_neg = g.compose_scale(Rat(-1));
  RationalPoly prod = g * g_neg;
  std::vector<Rat> g2(static_cast<size_t>(m) + 1, Rat(0));
  for (int i = 0; i <= prod.degree(); ++i) {
    if (i % 2 != 0) {
      if (prod.coeff(i) != 0)
        fail_internal("ConsistencyFailure", "G(u) G(-u) is not even");
      continue;
    }
    g2[static_cast<size_t>(i / 2)] =
        m % 2 == 0 ? prod.coeff(i) : -prod.coeff(i);
  }
  v.certificate_g2 = RationalPoly(std::move(g2));

  // All m roots of G real, all squares within [0, 4q]?
  RationalPoly g_sf = squarefree_part(g);
  bool all_real = sturm_count_all(g_sf) == g_sf.degree();
  bool in_window = true;
  if (all_real) {
    RationalPoly g2_sf = squarefree_part(v.certificate_g2);
    int expected = g2_sf.degree();
    int found = sturm_count(g2_sf, Rat(0), Rat(4) * Rat(q));
    if (g2_sf.evaluate(Rat(0)) == 0) ++found;  // (0, 4q] plus the endpoint 0
    in_window = found == expected;
  }
  v.holds = all_real && in_window;
  v.method = RhaMethod::ExactSturm;
  return v;
}

bool rha_deg2(const Rat& c0, const Int& q) {
  if (!(c0 > 0))
    fail_validation("PreconditionViolation", "c_0 must be positive");
  QuadRingElement sq = QuadRingElement::sqrt_q(q);
  QuadRingElement one(Rat(1), Rat(0), q);
  QuadRingElement c(c0, Rat(0), q);
  QuadRingElement plus = (sq + one) * (sq + one);    // (sqrt(q)+1)^2
  QuadRingElement minus = (sq - one) * (sq - one);   // (sqrt(q)-1)^2
  // 1/(sqrt(q)+1)^2 <= c_0 <= 1/(sqrt(q)-1)^2, cleared of denominators.
  return c * plus >= one && c * minus <= one;
}

bool rha_deg4(const Rat& c0, const Rat& c1, const Int& q) {
  if (!(c0 > 0 && c0 < 1))
    fail_validation("HypothesisViolation", "c_0 must lie in (0, 1)");
  QuadRingElement sq = QuadRingElement::sqrt_q(q);
  QuadRingElement one(Rat(1), Rat(0), q);
  QuadRingElement two(Rat(2), Rat(0), q);
  QuadRingElement four(Rat(4), Rat(0), q);
  QuadRingElement qe(Rat(q), Rat(0), q);
  QuadRingElement a(c0, Rat(0), q);
  QuadRingElement b(c1, Rat(0), q);

  // [(q+1) c_0 + c_1]^2 >= 4 c_0
  QuadRingElement lhs = (qe + one) * a + b;
  bool vertex = lhs * lhs >= four * a;

  // (q - 4 sqrt(q) + 1) c_0 <= c_1 <= (q + 4 sqrt(q) + 1) c_0
  QuadRingElement spread_lo = (qe - four * sq + one) * a;
  QuadRingElement spread_hi = (qe + four * sq + one) * a;
  bool spread = spread_lo <= b && b <= spread_hi;

  // c_1 <= 1/(sqrt(q)-1)^2 - 2 sqrt(q) c_0  and
  // c_1 <= 1/(sqrt(q)+1)^2 + 2 sqrt(q) c_0
  QuadRingElement inv_minus = ((sq - one) * (sq - one)).inverse();
  QuadRingElement inv_plus = ((sq + one) * (sq + one)).inverse();
  bool caps = b <= inv_minus - two * sq * a && b <= inv_plus + two * sq * a;

  return vertex && spread && caps;
}

FieldBoundResult field_bound(int k, int d, int g, const Int& w_d,
                             const Int& q) {
  if (g < 1)
    fail_validation("GenusZero", "the bound is undefined for genus 0");
  if (q < 2 || w_d < 0)
    fail_validation("RangeError", "need q >= 2 and W_d >= 0");
  Int qm1 = q - 1;
  if (w_d % qm1 != 0)
    fail_validation("DivisibilityViolation", "W_d not divisible by q - 1");
  FieldBoundResult out;
  out.nu = w_d / qm1;
  QuadRingElement sq = QuadRingElement::sqrt_q(q);
  QuadRingElement one(Rat(1), Rat(0), q);
  QuadRingElement lhs =
      QuadRingElement(Rat(out.nu), Rat(0), q) *
      (sq - one).pow(static_cast<unsigned>(2 * g));
  QuadRingElement rhs(Rat(binomial(2 * k, d)), Rat(0), q);
  out.bound_holds = lhs <= rhs;
  return out;
}

std::vector<Rat> log_coefficients(const RationalPoly& p, int window) {
  if (p.coeff(0) == 0)
    fail_validation("ZeroConstantTerm",
                    "the formal logarithm needs P(0) != 0");
  if (window < 0) fail_validation("RangeError", "negative window");
  // Q = P/P(0);  t Q' = Q * sum S_nu t^nu  gives
  // S_nu = nu q_nu - sum_{j=1}^{nu-1} S_j q_{nu-j}.
  Rat p0 = p.coeff(0);
  std::vector<Rat> s(static_cast<size_t>(window), Rat(0));
  for (int nu = 1; nu <= window; ++nu) {
    Rat acc = Rat(nu) * (p.coeff(nu) / p0);
    for (int j = 1; j < nu; ++j)
      acc -= s[static_cast<size_t>(j - 1)] * (p.coeff(nu - j) / p0);
    s[static_cast<size_t>(nu - 1)] = acc;
  }
  return s;
}

double log_coefficient_growth(const std::vector<Rat>& s, const Int& q) {
  double qd = Rat(q).get_d();
  double best = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    double nu = static_cast<double>(i + 1);
    double val = std::abs(s[i].get_d()) * std::pow(qd, -nu / 2.0);
    best = std::max(best, val);
  }
  return best;
}

}  // namespace zetacode
