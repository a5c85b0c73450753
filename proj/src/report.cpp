#include "zetacode/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>

#include "zetacode/funcfield.hpp"

namespace zetacode {

AnalysisReport build_analysis_report(const LinearCode& code,
                                     uint64_t budget) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.code_echo = code_to_json(code);
  r.rank_reduced = code.rank_reduced();
  if (r.rank_reduced)
    r.warnings.push_back(
        "generator rows were dependent; reduced to a row-space basis");

  r.weights = code.weight_distribution(budget);
  CodeProfile profile = profile_from_distribution(r.weights);
  r.dual_weights = macwilliams(r.weights);
  r.zeta = build_zeta_profile(r.weights, profile);
  r.fsd = build_fsd_report(r.weights, r.dual_weights, r.zeta);
  r.rha = rha_check(r.zeta.P, Int(static_cast<unsigned long>(profile.q)));

  if (profile.g >= 1) {
    r.bound = field_bound(profile.k, profile.d, profile.g,
                          r.weights.counts[static_cast<size_t>(profile.d)],
                          Int(static_cast<unsigned long>(profile.q)));
    r.bound_checked = true;
  } else {
    r.warnings.push_back("support-count bound skipped: genus 0 (MDS)");
  }

  auto end = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  return r;
}

Json analysis_report_to_json(const AnalysisReport& r) {
  Json bound;
  if (r.bound_checked)
    bound = Json{{"holds", r.bound.bound_holds}, {"nu", int_to_json(r.bound.nu)}};
  Json warnings = Json::array();
  for (const auto& w : r.warnings) warnings.push_back(w);
  return Json{{"code", r.code_echo},
              {"weights", wdist_to_json(r.weights)},
              {"dual_weights", wdist_to_json(r.dual_weights)},
              {"zeta", zeta_profile_to_json(r.zeta)},
              {"fsd", fsd_report_to_json(r.fsd)},
              {"rha", rha_verdict_to_json(r.rha)},
              {"field_bound", bound},
              {"rank_reduced", r.rank_reduced},
              {"elapsed_ms", r.elapsed_ms},
              {"warnings", warnings}};
}

namespace {

std::string poly_to_text(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rat mag = c > 0 ? c : Rat(-c);
    bool unit = mag == 1;
    if (!unit || i == 0) out += format_rational(mag);
    if (i >= 1) {
      if (!unit) out += " ";
      out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_distribution(std::ostream& os, const char* label,
                        const WeightDistribution& w) {
  os << label << " (nonzero weights):\n";
  for (int v = 0; v <= w.n; ++v) {
    const Int& c = w.counts[static_cast<size_t>(v)];
    if (c != 0) os << "    W^(" << v << ") = " << c.get_str() << "\n";
  }
}

}  // namespace

void print_analysis_report(std::ostream& os, const AnalysisReport& r) {
  const CodeProfile& p = r.zeta.profile;
  os << "code: [" << p.n << ", " << p.k << ", " << p.d << "] over GF(" << p.q
     << ")\n";
  os << "  genus g = " << p.g << ", dual genus = " << p.g_dual
     << ", r = " << r.zeta.r << ", dual distance = " << p.d_dual << "\n";
  print_distribution(os, "  weight distribution", r.weights);
  print_distribution(os, "  dual distribution (MacWilliams)", r.dual_weights);
  os << "  zeta polynomial P = " << poly_to_text(r.zeta.P) << "\n";
  os << "  reduced polynomial D = " << poly_to_text(r.zeta.D)
     << (r.zeta.mds ? "   (MDS: identically zero)" : "") << "\n";
  os << "self-duality battery:\n";
  os << "    parameter preconditions (n=2k, d=d_dual): "
     << yes_no(r.fsd.parameter_preconditions) << "\n";
  os << "    weight distributions equal:               "
     << yes_no(r.fsd.weight_equal) << "\n";
  os << "    zeta functional equation fixed point:     "
     << yes_no(r.fsd.zeta_fixed) << "\n";
  os << "    reduced-polynomial fixed point:           "
     << yes_no(r.fsd.d_fixed) << "\n";
  os << "    coefficient relations c_{g-1+i}=q^i c_{g-1-i}: "
     << yes_no(r.fsd.coeff_relations) << "\n";
  os << "    reconstruction from half coefficients:    "
     << yes_no(r.fsd.reconstruction_from_half) << "\n";
  os << "    reconstruction from low weights:          "
     << yes_no(r.fsd.reconstruction_from_low_weights) << "\n";
  os << "root location (all roots on |t| = q^{-1/2}): "
     << (r.rha.holds ? "HOLDS" : "FAILS") << "  [method "
     << rha_method_name(r.rha.method) << "]\n";
  if (!r.rha.root_diagnostics.empty()) {
    double worst = 0;
    for (const auto& d : r.rha.root_diagnostics)
      worst = std::max(worst, d.residual);
    os << "    numerical cross-check: " << r.rha.root_diagnostics.size()
       << " roots, worst |.|sqrt(q)-1 residual " << std::scientific
       << std::setprecision(2) << worst << std::defaultfloat << "\n";
  }
  if (r.bound_checked)
    os << "support-count bound nu (sqrt(q)-1)^{2g} <= C(2k, d): "
       << (r.bound.bound_holds ? "holds" : "VIOLATED")
       << "  (nu = " << r.bound.nu.get_str() << ")\n";
  for (const auto& w : r.warnings) os << "note: " << w << "\n";
  os << "elapsed: " << std::fixed << std::setprecision(1) << r.elapsed_ms
     << " ms" << std::defaultfloat << "\n";
}

void print_ff_profile(std::ostream& os, const FunctionFieldProfile& p,
                      const std::vector<Int>& b, const RelationsCheck& rel,
                      bool bounds_ok) {
  os << "function field: q = " << p.q.get_str() << ", genus " << p.g << "\n";
  os << "  L = " << poly_to_text(p.L) << "\n";
  os << "  class number h = L(1) = " << p.h.get_str() << "\n";
  os << "  divisor counts A =";
  for (const Int& a : p.A) os << " " << a.get_str();
  os << "\n";
  if (!p.a_nonnegative)
    os << "  note: negative A_i — formally valid but not geometric\n";
  os << "  reduced polynomial D_F = " << poly_to_text(p.D_F) << "\n";
  os << "  virtual class numbers h_0..h_g =";
  for (const Rat& h : p.h_seq) os << " " << format_rational(h);
  os << "\n";
  os << "  B_0..B_" << b.size() - 1 << " =";
  for (const Int& v : b) os << " " << v.get_str();
  os << "\n";
  os << "  fold/tail relations: " << (rel.ok ? "all hold" : "FAIL");
  if (!rel.ok)
    os << " (first failure: " << rel.relation << " at index " << rel.index
       << ")";
  os << "\n";
  os << "  class-number bounds (sqrt(q)-1)^{2g} <= h <= (sqrt(q)+1)^{2g}: "
     << yes_no(bounds_ok) << "\n";
}

}  // namespace zetacode
