#include <doctest.h>

#include <random>
#include <vector>

#include "support/corpus.hpp"
#include "zetacode/duality.hpp"
#include "zetacode/errors.hpp"
#include "zetacode/fixtures.hpp"

using namespace zetacode;

namespace {

Rat rat(long num, long den = 1) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

struct Setup {
  WeightDistribution w;
  WeightDistribution wd;
  ZetaProfile zp;
  FsdReport report;
};

Setup analyze(const LinearCode& code) {
  Setup s;
  s.w = code.weight_distribution();
  s.wd = macwilliams(s.w);
  s.zp = build_zeta_profile(s.w, profile_from_distribution(s.w));
  s.report = build_fsd_report(s.w, s.wd, s.zp);
  return s;
}

}  // namespace

TEST_CASE("self-dual codes pass the whole battery") {
  for (const LinearCode& code : testsupport::self_dual_corpus()) {
    CAPTURE(code.n());
    Setup s = analyze(code);
    CHECK(s.report.parameter_preconditions);
    CHECK(s.report.weight_equal);
    CHECK(s.report.zeta_fixed);
    CHECK(s.report.d_fixed);
    CHECK(s.report.coeff_relations);
    CHECK(s.report.reconstruction_from_half);
    CHECK(s.report.reconstruction_from_low_weights);
    CHECK(s.report.all_equivalent_conditions_true());
  }
}

TEST_CASE("the Hamming code separates the zeta conditions from weight equality") {
  Setup s = analyze(fixture_code("hamming74"));
  CHECK_FALSE(s.report.parameter_preconditions);  // n != 2k, d != d_dual
  CHECK_FALSE(s.report.weight_equal);
  CHECK(s.report.zeta_fixed);  // P is still a fixed point of the transform
  CHECK(s.report.d_fixed);
  CHECK(s.report.coeff_relations);
  CHECK_FALSE(s.report.all_equivalent_conditions_true());
}

TEST_CASE("functional equation at zeta and reduced level match coefficientwise test") {
  std::mt19937 rng(29);
  int symmetric_seen = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int g = 1 + static_cast<int>(rng() % 6);
    Int q(2 + static_cast<long>(rng() % 4));
    std::vector<Rat> cs;
    bool make_symmetric = iter % 2 == 0;
    if (make_symmetric) {
      // Build from the lower half so the relations hold by construction.
      std::vector<Rat> low(static_cast<size_t>(g));
      for (auto& c : low)
        c = rat(static_cast<long>(rng() % 13) - 6, 1 + rng() % 4);
      cs.assign(static_cast<size_t>(2 * g) - 1, rat(0));
      for (int i = 0; i < g; ++i) {
        cs[static_cast<size_t>(g - 1 - i)] = low[static_cast<size_t>(i)];
        cs[static_cast<size_t>(g - 1 + i)] =
            low[static_cast<size_t>(i)] *
            Rat(int_pow(q, static_cast<unsigned long>(i)));
      }
    } else {
      cs.resize(1 + rng() % (2 * static_cast<unsigned>(g)));
      for (auto& c : cs)
        c = rat(static_cast<long>(rng() % 13) - 6, 1 + rng() % 4);
    }
    RationalPoly d(cs);
    bool via_transform = check_d_functional(d, q, g);
    bool via_coeffs = check_coeff_relations(d, q, g);
    CHECK(via_transform == via_coeffs);
    RationalPoly p = zeta_from_dc(d, g, q);
    CHECK(check_zeta_functional(p, q, g) == via_transform);
    if (make_symmetric) {
      CHECK(via_transform);
      ++symmetric_seen;
    }
  }
  CHECK(symmetric_seen == 100);
}

TEST_CASE("reconstruction from half the reduced coefficients") {
  // Extended Hamming [8,4,4], g = 1: the half is just c_0 = 1/5.
  LinearCode ext = fixture_code("ext_hamming84");
  WeightDistribution we = ext.weight_distribution();
  CodeProfile pe = profile_from_distribution(we);
  CHECK(fsd_reconstruct_from_half({rat(1, 5)}, pe).counts == we.counts);
  CHECK(fsd_reconstruct_from_low_weights({Int(14)}, pe).counts == we.counts);

  // Golay [24,12,8], g = 5: lower half c_0..c_4.
  LinearCode golay = fixture_code("golay24");
  WeightDistribution wg = golay.weight_distribution();
  CodeProfile pg = profile_from_distribution(wg);
  std::vector<Rat> half{rat(1, 969), rat(3, 323), rat(15, 323), rat(55, 323),
                        rat(2149, 4199)};
  CHECK(fsd_reconstruct_from_half(half, pg).counts == wg.counts);
  CHECK(fsd_reconstruct_from_low_weights(
            {Int(759), Int(0), Int(0), Int(0), Int(2576)}, pg)
            .counts == wg.counts);

  // Tetracode, g = 0: the reconstruction is the bare MDS enumerator.
  LinearCode tet = fixture_code("tetracode");
  WeightDistribution wt = tet.weight_distribution();
  CodeProfile pt = profile_from_distribution(wt);
  CHECK(fsd_reconstruct_from_half({}, pt).counts == wt.counts);
  CHECK(fsd_reconstruct_from_low_weights({}, pt).counts == wt.counts);

  CHECK_THROWS_WITH_AS(fsd_reconstruct_from_half({rat(1, 5), rat(0)}, pe),
                       doctest::Contains("LengthMismatch"), Error);
  CHECK_THROWS_WITH_AS(fsd_reconstruct_from_low_weights({}, pe),
                       doctest::Contains("LengthMismatch"), Error);
  // Parameter preconditions: Hamming is not half-length.
  CodeProfile ph = fixture_code("hamming74").profile();
  CHECK_THROWS_WITH_AS(fsd_reconstruct_from_half({rat(1, 5)}, ph),
                       doctest::Contains("PreconditionViolation"), Error);
  CHECK_THROWS_WITH_AS(fsd_reconstruct_from_low_weights({Int(7)}, ph),
                       doctest::Contains("PreconditionViolation"), Error);
}

TEST_CASE("distribution comparison demands matching shapes") {
  WeightDistribution a = fixture_code("hamming74").weight_distribution();
  WeightDistribution b = fixture_code("ext_hamming84").weight_distribution();
  CHECK_THROWS_WITH_AS(check_fsd_definition(a, b),
                       doctest::Contains("LengthMismatch"), Error);
  CHECK(check_fsd_definition(a, a));
  CHECK_FALSE(check_fsd_definition(a, macwilliams(a)));
}
