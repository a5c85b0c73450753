#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zetacode/errors.hpp"
#include "zetacode/fixtures.hpp"
#include "zetacode/funcfield.hpp"
#include "zetacode/json_io.hpp"
#include "zetacode/report.hpp"

namespace {

using namespace zetacode;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail_validation("RangeError", "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LinearCode load_code(const std::string& path) {
  return code_from_json(parse_json_text(slurp(path)));
}

// --out PATH writes JSON (PATH "-" meaning standard output); otherwise the
// human-readable `fallback` text goes to standard output.
void emit(const std::string& out, const Json& json,
          const std::string& fallback) {
  if (out.empty()) {
    std::cout << fallback;
    return;
  }
  std::string text = json.dump(2) + "\n";
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os)
    fail_validation("RangeError", "cannot open output file '" + out + "'");
  os << text;
}

struct CodeCmdArgs {
  std::string input;
  std::string dir;
  std::string out;
  uint64_t budget = 1ull << 20;
};

std::vector<std::string> batch_inputs(const CodeCmdArgs& args) {
  if (args.input.empty() == args.dir.empty())
    fail_validation("RangeError", "need exactly one of --input or --dir");
  if (!args.input.empty()) return {args.input};
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry :
       std::filesystem::directory_iterator(args.dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  }
  if (ec)
    fail_validation("RangeError", "cannot read directory '" + args.dir + "'");
  std::sort(files.begin(), files.end());
  if (files.empty())
    fail_validation("RangeError",
                    "no .json files in directory '" + args.dir + "'");
  return files;
}

int run_code_analyze(const CodeCmdArgs& args) {
  std::vector<std::string> files = batch_inputs(args);
  Json out_json = Json::array();
  std::ostringstream human;
  int worst = 0;
  for (const auto& path : files) {
    try {
      AnalysisReport report = build_analysis_report(load_code(path), args.budget);
      out_json.push_back(analysis_report_to_json(report));
      if (files.size() > 1) human << "== " << path << " ==\n";
      print_analysis_report(human, report);
    } catch (const Error& e) {
      if (files.size() == 1) throw;
      // Batch mode: isolate per-file failures, keep going.
      out_json.push_back(error_to_json(e));
      human << "== " << path << " ==\nerror: " << e.what() << "\n";
      worst = std::max(worst, e.kind() == ErrorKind::Validation ? 2 : 3);
    }
  }
  emit(args.out, files.size() == 1 ? out_json.at(0) : out_json, human.str());
  return worst;
}

int run_code_wdist(const CodeCmdArgs& args) {
  if (args.input.empty())
    fail_validation("RangeError", "--input is required");
  WeightDistribution w =
      load_code(args.input).weight_distribution(args.budget);
  std::ostringstream human;
  human << "[" << w.n << ", " << w.k << "] over GF(" << w.q << ")\n";
  for (int v = 0; v <= w.n; ++v)
    if (w.counts[static_cast<size_t>(v)] != 0)
      human << "  W^(" << v
            << ") = " << w.counts[static_cast<size_t>(v)].get_str() << "\n";
  emit(args.out, wdist_to_json(w), human.str());
  return 0;
}

int run_code_zeta(const CodeCmdArgs& args) {
  if (args.input.empty())
    fail_validation("RangeError", "--input is required");
  LinearCode code = load_code(args.input);
  WeightDistribution w = code.weight_distribution(args.budget);
  ZetaProfile zp = build_zeta_profile(w, profile_from_distribution(w));
  std::ostringstream human;
  human << "[" << zp.profile.n << ", " << zp.profile.k << ", " << zp.profile.d
        << "] over GF(" << zp.profile.q << "), g = " << zp.profile.g
        << ", r = " << zp.r << (zp.mds ? "  (MDS)" : "") << "\n";
  auto line = [&human](const char* label, const std::vector<Rat>& v) {
    human << "  " << label << " =";
    for (const Rat& x : v) human << " " << format_rational(x);
    human << "\n";
  };
  line("P", zp.P.coeffs());
  line("D", zp.D.coeffs());
  line("a", zp.a);
  line("c", zp.c);
  emit(args.out, zeta_profile_to_json(zp), human.str());
  return 0;
}

int run_code_fsd(const CodeCmdArgs& args) {
  if (args.input.empty())
    fail_validation("RangeError", "--input is required");
  LinearCode code = load_code(args.input);
  WeightDistribution w = code.weight_distribution(args.budget);
  CodeProfile profile = profile_from_distribution(w);
  ZetaProfile zp = build_zeta_profile(w, profile);
  FsdReport fsd = build_fsd_report(w, macwilliams(w), zp);
  std::ostringstream human;
  auto flag = [&human](const char* label, bool v) {
    human << "  " << label << ": " << (v ? "yes" : "no") << "\n";
  };
  human << "formal self-duality battery for [" << fsd.n << ", " << fsd.k
        << ", " << fsd.d << "] over GF(" << fsd.q << ")\n";
  flag("parameter preconditions", fsd.parameter_preconditions);
  flag("weight distributions equal", fsd.weight_equal);
  flag("zeta fixed point", fsd.zeta_fixed);
  flag("reduced fixed point", fsd.d_fixed);
  flag("coefficient relations", fsd.coeff_relations);
  flag("reconstruction from half", fsd.reconstruction_from_half);
  flag("reconstruction from low weights", fsd.reconstruction_from_low_weights);
  emit(args.out, fsd_report_to_json(fsd), human.str());
  return 0;
}

int run_code_rha(const CodeCmdArgs& args) {
  if (args.input.empty())
    fail_validation("RangeError", "--input is required");
  LinearCode code = load_code(args.input);
  WeightDistribution w = code.weight_distribution(args.budget);
  CodeProfile profile = profile_from_distribution(w);
  ZetaProfile zp = build_zeta_profile(w, profile);
  RhaVerdict v =
      rha_check(zp.P, Int(static_cast<unsigned long>(profile.q)));
  std::ostringstream human;
  human << "all zeta roots on |t| = q^{-1/2}: " << (v.holds ? "yes" : "no")
        << "  [method " << rha_method_name(v.method) << "]\n";
  emit(args.out, rha_verdict_to_json(v), human.str());
  return 0;
}

struct FfArgs {
  std::vector<long> lpoly;
  std::vector<long> points;
  long q = 0;
  int count = -1;
  std::string out;
};

int run_ff_analyze(const FfArgs& args) {
  if (args.q < 2) fail_validation("RangeError", "--q must be at least 2");
  if (args.lpoly.empty() == args.points.empty())
    fail_validation("RangeError", "need exactly one of --lpoly or --points");
  Int q(args.q);
  FunctionFieldProfile profile;
  if (!args.lpoly.empty()) {
    std::vector<Int> coeffs(args.lpoly.begin(), args.lpoly.end());
    profile = profile_from_lpoly(coeffs, q);
  } else {
    std::vector<Int> counts(args.points.begin(), args.points.end());
    profile = profile_from_point_counts(counts, q);
  }
  int count = args.count >= 0 ? args.count : std::max(3 * profile.g, 10);
  std::vector<Int> b = b_sequence(profile, count);
  RelationsCheck rel = b_relations_on(profile, b);
  bool bounds_ok = class_number_bounds(profile);

  Json json = ff_profile_to_json(profile);
  Json jb = Json::array();
  for (const Int& v : b) jb.push_back(int_to_json(v));
  json["B"] = jb;
  json["relations_ok"] = rel.ok;
  if (!rel.ok) {
    json["relations_failure"] =
        Json{{"index", rel.index}, {"relation", rel.relation}};
  }
  json["class_number_bounds"] = bounds_ok;

  std::ostringstream human;
  print_ff_profile(human, profile, b, rel, bounds_ok);
  emit(args.out, json, human.str());
  return 0;
}

struct FixtureArgs {
  std::string name;
  long q = 0;
  int n = 0;
  int k = 0;
  std::string out;
};

int run_fixtures(const FixtureArgs& args) {
  LinearCode code =
      fixture_code(args.name, static_cast<uint64_t>(args.q), args.n, args.k);
  Json json = code_to_json(code);
  // Code JSON is the primary product here; default to stdout JSON.
  emit(args.out.empty() ? "-" : args.out, json, "");
  return 0;
}

struct RandArgs {
  long q = 0;
  int n = 0;
  int k = 0;
  uint64_t seed = 0;
  std::string out;
};

int run_rand_code(const RandArgs& args) {
  LinearCode code =
      random_code(static_cast<uint64_t>(args.q), args.n, args.k, args.seed);
  emit(args.out.empty() ? "-" : args.out, code_to_json(code), "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zetacode: exact weight-distribution <-> zeta-polynomial analysis "
      "of linear codes, with function-field analogues"};
  app.require_subcommand(1);

  CodeCmdArgs code_args;
  auto* code = app.add_subcommand("code", "analyze a linear code from JSON");
  code->require_subcommand(1);
  auto add_code_common = [&](CLI::App* sub, bool dir_ok) {
    sub->add_option("--input", code_args.input, "code JSON file");
    if (dir_ok)
      sub->add_option("--dir", code_args.dir,
                      "directory of code JSON files (batch)");
    sub->add_option("--out", code_args.out, "write JSON here ('-' = stdout)");
    sub->add_option("--budget", code_args.budget,
                    "enumeration budget (max q^k), default 2^20");
  };
  auto* code_analyze =
      code->add_subcommand("analyze", "full pipeline report");
  add_code_common(code_analyze, true);
  auto* code_wdist =
      code->add_subcommand("wdist", "exhaustive weight distribution");
  add_code_common(code_wdist, false);
  auto* code_zeta =
      code->add_subcommand("zeta", "zeta and reduced polynomials");
  add_code_common(code_zeta, false);
  auto* code_fsd =
      code->add_subcommand("fsd", "formal self-duality battery");
  add_code_common(code_fsd, false);
  auto* code_rha =
      code->add_subcommand("rha", "root-location verdict for the zeta");
  add_code_common(code_rha, false);

  FfArgs ff_args;
  auto* ff = app.add_subcommand("ff", "function-field analysis");
  ff->require_subcommand(1);
  auto* ff_analyze = ff->add_subcommand(
      "analyze", "profile from an L-polynomial or point counts");
  ff_analyze->add_option("--lpoly", ff_args.lpoly,
                         "integer L coefficients, ascending (1,0,4,0,4)")
      ->delimiter(',');
  ff_analyze->add_option("--points", ff_args.points,
                         "rational point counts N_1..N_g")
      ->delimiter(',');
  ff_analyze->add_option("--q", ff_args.q, "field size")->required();
  ff_analyze->add_option("--count", ff_args.count,
                         "compute B_0..B_count (default max(3g, 10))");
  ff_analyze->add_option("--out", ff_args.out,
                         "write JSON here ('-' = stdout)");

  FixtureArgs fx_args;
  auto* fixtures =
      app.add_subcommand("fixtures", "emit a built-in code as JSON");
  fixtures
      ->add_option("--name", fx_args.name,
                   "hamming74|ext_hamming84|golay24|simplex73|tetracode|"
                   "rs|full")
      ->required();
  fixtures->add_option("--q", fx_args.q, "field size (rs, full)");
  fixtures->add_option("--n", fx_args.n, "length (rs, full)");
  fixtures->add_option("--k", fx_args.k, "dimension (rs)");
  fixtures->add_option("--out", fx_args.out, "write JSON here");

  RandArgs rand_args;
  auto* rand = app.add_subcommand("rand", "random instances");
  rand->require_subcommand(1);
  auto* rand_code_cmd =
      rand->add_subcommand("code", "seeded random full-rank code");
  rand_code_cmd->add_option("--q", rand_args.q, "field size")->required();
  rand_code_cmd->add_option("--n", rand_args.n, "length")->required();
  rand_code_cmd->add_option("--k", rand_args.k, "dimension")->required();
  rand_code_cmd->add_option("--seed", rand_args.seed, "RNG seed");
  rand_code_cmd->add_option("--out", rand_args.out, "write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cout << zetacode::Json{
                     {"error",
                      {{"code", "UsageError"}, {"message", e.what()}}}}
                     .dump(2)
              << std::endl;
    return 2;
  }

  try {
    if (code_analyze->parsed()) return run_code_analyze(code_args);
    if (code_wdist->parsed()) return run_code_wdist(code_args);
    if (code_zeta->parsed()) return run_code_zeta(code_args);
    if (code_fsd->parsed()) return run_code_fsd(code_args);
    if (code_rha->parsed()) return run_code_rha(code_args);
    if (ff_analyze->parsed()) return run_ff_analyze(ff_args);
    if (fixtures->parsed()) return run_fixtures(fx_args);
    if (rand_code_cmd->parsed()) return run_rand_code(rand_args);
  } catch (const zetacode::Error& e) {
    std::cout << error_to_json(e).dump(2) << std::endl;
    return e.kind() == ErrorKind::Validation ? 2 : 3;
  } catch (const std::exception& e) {
    std::cout << zetacode::Json{
                     {"error",
                      {{"code", "Unhandled"}, {"message", e.what()}}}}
                     .dump(2)
              << std::endl;
    return 3;
  }
  return 0;
}
