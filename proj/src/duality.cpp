#include "zetacode/duality.hpp"

#include <algorithm>

#include "zetacode/errors.hpp"

namespace zetacode {

bool check_fsd_definition(const WeightDistribution& wc,
                          const WeightDistribution& wdual) {
  if (wc.n != wdual.n)
    fail_validation("LengthMismatch", "distributions have different lengths");
  return wc.counts == wdual.counts;
}

bool check_zeta_functional(const RationalPoly& p, const Int& q, int g) {
  if (p.is_zero()) return true;
  if (g < 0 || p.degree() > 2 * g) return false;
  return p == q_reciprocal_transform(p, q, g, 2 * g);
}

bool check_d_functional(const RationalPoly& d, const Int& q, int g) {
  if (d.is_zero()) return true;
  if (g < 1 || d.degree() > 2 * g - 2) return false;
  return d == q_reciprocal_transform(d, q, g - 1, 2 * g - 2);
}

bool check_coeff_relations(const RationalPoly& d, const Int& q, int g) {
  if (d.is_zero()) return true;
  if (g < 1) return false;
  // Pairs beyond the r-2 window must be zero on both sides; extending the
  // index range with zero coefficients keeps this test equivalent to the
  // functional-equation form for any input degree.
  int top = std::max(g - 1, d.degree() - (g - 1));
  for (int i = 1; i <= top; ++i) {
    Rat lhs = d.coeff(g - 1 + i);
    Rat rhs = (g - 1 - i >= 0)
                  ? d.coeff(g - 1 - i) * Rat(int_pow(q, static_cast<unsigned long>(i)))
                  : Rat(0);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

void check_fsd_parameters(const CodeProfile& p, bool need_d_le_k) {
  if (p.n != 2 * p.k)
    fail_validation("PreconditionViolation",
                    "reconstruction needs n = 2k");
  if (!need_d_le_k && p.d != p.d_dual)
    fail_validation("PreconditionViolation",
                    "reconstruction needs d = d_dual");
  if (need_d_le_k && p.d > p.k + 1)
    fail_validation("PreconditionViolation",
                    "reconstruction needs d <= k + 1");
}

std::vector<Rat> mds_base(const CodeProfile& p) {
  Int q(static_cast<unsigned long>(p.q));
  std::vector<Rat> vals(static_cast<size_t>(p.n) + 1, Rat(0));
  vals[0] = 1;
  for (int v = 1; v <= p.n; ++v)
    vals[static_cast<size_t>(v)] = Rat(mds_weight(p.n, p.k + 1, q, v));
  return vals;
}

WeightDistribution finish(std::vector<Rat> vals, const CodeProfile& p) {
  std::vector<Int> counts;
  counts.reserve(vals.size());
  for (const Rat& v : vals) {
    if (!is_integral(v))
      fail_validation("NonIntegerWeight",
                      "reconstructed count is not an integer");
    if (v < 0)
      fail_validation("NegativeWeight", "reconstructed count is negative");
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

WeightDistribution fsd_reconstruct_from_half(const std::vector<Rat>& c_low,
                                             const CodeProfile& p) {
  check_fsd_parameters(p, /*need_d_le_k=*/false);
  if (static_cast<int>(c_low.size()) != p.g)
    fail_validation("LengthMismatch", "need exactly c_0..c_{g-1}");
  Int q(static_cast<unsigned long>(p.q));
  int k = p.k;
  std::vector<Rat> vals = mds_base(p);
  for (int j = 0; j <= p.g - 1; ++j) {
    const Rat& cj = c_low[static_cast<size_t>(p.g - 1 - j)];
    if (cj == 0) continue;
    Rat scale = Rat(q - 1) * Rat(binomial(p.n, k + j));
    for (int v = 0; v <= p.n; ++v) {
      Rat kernel =
          j == 0 ? binomial_kernel(k, k, v)
                 : binomial_kernel(k + j, k - j, v) +
                       Rat(int_pow(q, static_cast<unsigned long>(j))) *
                           binomial_kernel(k - j, k + j, v);
      vals[static_cast<size_t>(v)] += cj * scale * kernel;
    }
  }
  return finish(std::move(vals), p);
}

WeightDistribution fsd_reconstruct_from_low_weights(
    const std::vector<Int>& low, const CodeProfile& p) {
  check_fsd_parameters(p, /*need_d_le_k=*/true);
  int k = p.k;
  if (static_cast<int>(low.size()) != k - p.d + 1)
    fail_validation("LengthMismatch", "need exactly W^(d)..W^(k)");
  Int q(static_cast<unsigned long>(p.q));
  std::vector<Rat> vals = mds_base(p);
  // d = k + 1 (genus 0): no free counts, W is the MDS enumerator itself.
  if (low.empty()) return finish(std::move(vals), p);
  for (int v = 0; v <= p.n; ++v) {
    Rat acc = 0;
    for (int w = p.d; w <= k - 1; ++w) {
      if (low[static_cast<size_t>(w - p.d)] == 0) continue;
      Rat phi = 0;
      for (int s = w; s <= k - 1; ++s) {
        phi += Rat(binomial(2 * k - w, s - w)) *
               (binomial_kernel(2 * k - s, s, v) +
                Rat(int_pow(q, static_cast<unsigned long>(k - s))) *
                    binomial_kernel(s, 2 * k - s, v));
      }
      phi += Rat(binomial(2 * k - w, k)) * binomial_kernel(k, k, v);
      acc += Rat(low[static_cast<size_t>(w - p.d)]) * phi;
    }
    acc += Rat(low[static_cast<size_t>(k - p.d)]) * binomial_kernel(k, k, v);
    vals[static_cast<size_t>(v)] += acc;
  }
  return finish(std::move(vals), p);
}

FsdReport build_fsd_report(const WeightDistribution& w,
                           const WeightDistribution& wdual,
                           const ZetaProfile& zp) {
  const CodeProfile& p = zp.profile;
  Int q(static_cast<unsigned long>(p.q));
  FsdReport rep;
  rep.n = p.n;
  rep.k = p.k;
  rep.d = p.d;
  rep.d_dual = p.d_dual;
  rep.g = p.g;
  rep.g_dual = p.g_dual;
  rep.q = p.q;
  rep.parameter_preconditions =
      p.n == 2 * p.k && p.d == p.d_dual && p.g == p.g_dual;
  rep.weight_equal = check_fsd_definition(w, wdual);
  rep.zeta_fixed = check_zeta_functional(zp.P, q, p.g);
  rep.d_fixed = check_d_functional(zp.D, q, p.g);
  rep.coeff_relations = check_coeff_relations(zp.D, q, p.g);

  if (rep.parameter_preconditions) {
    if (p.g == 0) {
      // Both reconstructions degenerate to the bare MDS enumerator.
      bool pure_mds = true;
      for (int v = 1; v <= p.n; ++v) {
        if (Rat(w.counts[static_cast<size_t>(v)]) !=
            Rat(mds_weight(p.n, p.k + 1, q, v))) {
          pure_mds = false;
          break;
        }
      }
      rep.reconstruction_from_half = pure_mds;
      rep.reconstruction_from_low_weights = pure_mds;
    } else {
      std::vector<Rat> c_low(zp.c.begin(),
                             zp.c.begin() + std::min<size_t>(zp.c.size(),
                                                             static_cast<size_t>(p.g)));
      c_low.resize(static_cast<size_t>(p.g), Rat(0));
      try {
        WeightDistribution rec = fsd_reconstruct_from_half(c_low, p);
        rep.reconstruction_from_half = rec.counts == w.counts;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Validation) throw;
        rep.reconstruction_from_half = false;
      }
      std::vector<Int> low;
      for (int ww = p.d; ww <= p.k; ++ww)
        low.push_back(w.counts[static_cast<size_t>(ww)]);
      try {
        WeightDistribution rec = fsd_reconstruct_from_low_weights(low, p);
        rep.reconstruction_from_low_weights = rec.counts == w.counts;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Validation) throw;
        rep.reconstruction_from_low_weights = false;
      }
    }
  }
  return rep;
}

}  // namespace zetacode
