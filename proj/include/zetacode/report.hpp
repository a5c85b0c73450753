#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "zetacode/duality.hpp"
#include "zetacode/json_io.hpp"
#include "zetacode/rha.hpp"
#include "zetacode/zeta.hpp"

namespace zetacode {

// Everything the full pipeline derives from one code: distribution, dual
// distribution (MacWilliams), zeta data, the self-duality battery, the
// root-location verdict and the support-count bound. Divergent outcomes
// (e.g. zeta fixed point without weight-level self-duality) are surfaced
// side by side, never collapsed.
struct AnalysisReport {
  Json code_echo;
  WeightDistribution weights;
  WeightDistribution dual_weights;
  ZetaProfile zeta;
  FsdReport fsd;
  RhaVerdict rha;
  bool bound_checked = false;  // stays false for genus 0 (bound undefined)
  FieldBoundResult bound{};
  bool rank_reduced = false;
  double elapsed_ms = 0;
  std::vector<std::string> warnings;
};

AnalysisReport build_analysis_report(const LinearCode& code,
                                     uint64_t budget = 1ull << 20);

Json analysis_report_to_json(const AnalysisReport& r);

// Human-readable summary table.
void print_analysis_report(std::ostream& os, const AnalysisReport& r);
void print_ff_profile(std::ostream& os, const FunctionFieldProfile& p,
                      const std::vector<Int>& b, const RelationsCheck& rel,
                      bool bounds_ok);

}  // namespace zetacode
