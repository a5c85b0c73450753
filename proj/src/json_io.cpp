#include "zetacode/json_io.hpp"

#include <limits>

namespace zetacode {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  fail_validation("RangeError", what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad_input(std::string("missing field '") + key + "'");
  return j.at(key);
}

long to_long(const Json& j, const char* what) {
  if (!j.is_number_integer())
    bad_input(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (!is_integral(r)) bad_input("expected an integer, got a fraction");
    return to_integer(r);
  }
  bad_input("expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& v) { return Json(format_rational(v)); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad_input("expected a rational (\"num/den\" string or integer)");
}

Json field_to_json(const FieldSpec& f) {
  Json mod = Json::array();
  for (uint32_t c : f.modulus()) mod.push_back(c);
  return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", mod}};
}

FieldRef field_from_json(const Json& j) {
  long p = to_long(require(j, "p"), "p");
  long m = to_long(require(j, "m"), "m");
  if (p < 2 || m < 1) bad_input("need p >= 2 and m >= 1");
  std::vector<uint32_t> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    const Json& arr = j.at("modulus");
    if (!arr.is_array()) bad_input("modulus must be an array");
    for (const Json& c : arr) {
      long v = to_long(c, "modulus coefficient");
      if (v < 0) bad_input("modulus coefficients must be non-negative");
      modulus.push_back(static_cast<uint32_t>(v));
    }
  }
  return FieldSpec::make(static_cast<uint64_t>(p), static_cast<uint32_t>(m),
                         std::move(modulus));
}

Json code_to_json(const LinearCode& c) {
  const FieldSpec& f = *c.field();
  Json rows = Json::array();
  for (const auto& row : c.generator()) {
    Json jr = Json::array();
    for (uint32_t v : row) {
      if (f.m() == 1) {
        jr.push_back(v);
      } else {
        Json coeffs = Json::array();
        for (uint32_t d : f.to_coeffs(v)) coeffs.push_back(d);
        jr.push_back(coeffs);
      }
    }
    rows.push_back(jr);
  }
  return Json{{"field", field_to_json(f)}, {"rows", rows}};
}

LinearCode code_from_json(const Json& j) {
  FieldRef field = field_from_json(require(j, "field"));
  const Json& jrows = require(j, "rows");
  if (!jrows.is_array()) bad_input("rows must be an array");
  std::vector<std::vector<uint32_t>> rows;
  for (const Json& jr : jrows) {
    if (!jr.is_array()) bad_input("each row must be an array");
    std::vector<uint32_t> row;
    for (const Json& e : jr) {
      if (e.is_array()) {
        std::vector<uint32_t> coeffs;
        for (const Json& c : e) {
          long v = to_long(c, "entry coefficient");
          if (v < 0 || static_cast<uint64_t>(v) >= field->p())
            bad_input("entry coefficient out of range for GF(p)");
          coeffs.push_back(static_cast<uint32_t>(v));
        }
        if (coeffs.size() > field->m())
          bad_input("entry has more coefficients than the field degree");
        coeffs.resize(field->m(), 0);
        row.push_back(field->from_coeffs(coeffs));
      } else {
        long v = to_long(e, "matrix entry");
        if (v < 0 || static_cast<uint64_t>(v) >= field->q())
          bad_input("matrix entry out of range for the field");
        row.push_back(static_cast<uint32_t>(v));
      }
    }
    rows.push_back(std::move(row));
  }
  return LinearCode(std::move(field), std::move(rows));
}

Json wdist_to_json(const WeightDistribution& w) {
  Json counts = Json::array();
  for (const Int& c : w.counts) counts.push_back(int_to_json(c));
  return Json{{"n", w.n}, {"k", w.k}, {"q", w.q}, {"counts", counts}};
}

WeightDistribution wdist_from_json(const Json& j) {
  WeightDistribution w;
  w.n = static_cast<int>(to_long(require(j, "n"), "n"));
  w.k = static_cast<int>(to_long(require(j, "k"), "k"));
  long q = to_long(require(j, "q"), "q");
  if (w.n < 1 || w.k < 0 || q < 2) bad_input("bad distribution parameters");
  w.q = static_cast<uint32_t>(q);
  const Json& counts = require(j, "counts");
  if (!counts.is_array() ||
      counts.size() != static_cast<size_t>(w.n) + 1)
    bad_input("counts must be an array of n + 1 entries");
  for (const Json& c : counts) w.counts.push_back(int_from_json(c));
  return w;
}

Json poly_to_json(const RationalPoly& p) {
  Json coeffs = Json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_json(c));
  return Json{{"coeffs", coeffs}};
}

RationalPoly poly_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) arr = &require(j, "coeffs");
  if (!arr->is_array()) bad_input("polynomial coefficients must be an array");
  std::vector<Rat> coeffs;
  for (const Json& c : *arr) coeffs.push_back(rat_from_json(c));
  return RationalPoly(std::move(coeffs));
}

Json code_profile_to_json(const CodeProfile& p) {
  return Json{{"n", p.n},           {"k", p.k},
              {"d", p.d},           {"g", p.g},
              {"k_dual", p.k_dual}, {"d_dual", p.d_dual},
              {"g_dual", p.g_dual}, {"q", p.q},
              {"r", p.r()}};
}

Json zeta_profile_to_json(const ZetaProfile& z) {
  Json a = Json::array();
  for (const Rat& v : z.a) a.push_back(rat_to_json(v));
  Json c = Json::array();
  for (const Rat& v : z.c) c.push_back(rat_to_json(v));
  return Json{{"profile", code_profile_to_json(z.profile)},
              {"P", poly_to_json(z.P)},
              {"D", poly_to_json(z.D)},
              {"a", a},
              {"c", c},
              {"mds", z.mds},
              {"r", z.r}};
}

Json fsd_report_to_json(const FsdReport& r) {
  return Json{
      {"parameter_preconditions", r.parameter_preconditions},
      {"weight_equal", r.weight_equal},
      {"zeta_fixed", r.zeta_fixed},
      {"d_fixed", r.d_fixed},
      {"coeff_relations", r.coeff_relations},
      {"reconstruction_from_half", r.reconstruction_from_half},
      {"reconstruction_from_low_weights", r.reconstruction_from_low_weights},
      {"all_equivalent_conditions_true", r.all_equivalent_conditions_true()},
      {"n", r.n},
      {"k", r.k},
      {"d", r.d},
      {"d_dual", r.d_dual},
      {"g", r.g},
      {"g_dual", r.g_dual},
      {"q", r.q}};
}

Json rha_verdict_to_json(const RhaVerdict& v) {
  Json diags = Json::array();
  for (const auto& d : v.root_diagnostics)
    diags.push_back(Json{{"re", d.root.real()},
                         {"im", d.root.imag()},
                         {"residual", d.residual}});
  return Json{{"holds", v.holds},
              {"method", rha_method_name(v.method)},
              {"certificate_g", poly_to_json(v.certificate_g)},
              {"certificate_g2", poly_to_json(v.certificate_g2)},
              {"root_diagnostics", diags}};
}

namespace {

Json int_poly_to_json_array(const RationalPoly& p, int min_len) {
  Json arr = Json::array();
  int top = std::max(p.degree(), min_len - 1);
  for (int i = 0; i <= top; ++i) {
    const Rat c = p.coeff(i);
    if (!is_integral(c))
      fail_internal("ConsistencyFailure", "expected integer coefficients");
    arr.push_back(int_to_json(to_integer(c)));
  }
  return arr;
}

}  // namespace

Json ff_profile_to_json(const FunctionFieldProfile& p) {
  Json a = Json::array();
  for (const Int& v : p.A) a.push_back(int_to_json(v));
  Json h_seq = Json::array();
  for (const Rat& v : p.h_seq) h_seq.push_back(rat_to_json(v));
  return Json{{"q", int_to_json(p.q)},
              {"g", p.g},
              {"L", int_poly_to_json_array(p.L, 1)},
              {"A", a},
              {"h", int_to_json(p.h)},
              {"D_F", int_poly_to_json_array(p.D_F, 1)},
              {"h_seq", h_seq},
              {"a_nonnegative", p.a_nonnegative}};
}

FunctionFieldProfile ff_profile_from_json(const Json& j) {
  const Json& l = require(j, "L");
  if (!l.is_array()) bad_input("L must be an array");
  std::vector<Int> coeffs;
  for (const Json& c : l) coeffs.push_back(int_from_json(c));
  return profile_from_lpoly(coeffs, int_from_json(require(j, "q")));
}

Json error_to_json(const Error& e) {
  std::string message = e.what();
  // what() is "code: message"; strip the prefix for the message field.
  std::string prefix = e.code() + ": ";
  if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
  return Json{{"error", Json{{"code", e.code()}, {"message", message}}}};
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad_input("input is not valid JSON");
  return j;
}

}  // namespace zetacode
