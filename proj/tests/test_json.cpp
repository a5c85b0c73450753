#include <doctest.h>

#include <string>
#include <vector>

#include "zetacode/errors.hpp"
#include "zetacode/fixtures.hpp"
#include "zetacode/json_io.hpp"
#include "zetacode/report.hpp"

using namespace zetacode;

namespace {

Rat rat(long num, long den = 1) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

TEST_CASE("integers and rationals on the wire") {
  CHECK(int_to_json(Int(42)).is_number());
  CHECK(int_from_json(int_to_json(Int(42))) == 42);
  // Beyond 64 bits: decimal string, exact round trip.
  Int big = int_pow(Int(10), 30) + 7;
  Json jbig = int_to_json(big);
  CHECK(jbig.is_string());
  CHECK(int_from_json(jbig) == big);
  CHECK(int_from_json(Json("-12")) == -12);

  CHECK(rat_to_json(rat(3, 4)) == Json("3/4"));
  CHECK(rat_to_json(rat(5)) == Json("5"));
  CHECK(rat_from_json(Json("3/4")) == rat(3, 4));
  CHECK(rat_from_json(Json(7)) == rat(7));
  CHECK_THROWS_WITH_AS(rat_from_json(Json("3/0")), doctest::Contains("RangeError"),
                       Error);
  CHECK_THROWS_WITH_AS(rat_from_json(Json("abc")), doctest::Contains("RangeError"),
                       Error);
}

TEST_CASE("field and code round trips") {
  FieldRef f4 = field_of_size(4);
  Json jf = field_to_json(*f4);
  CHECK(jf["p"] == 2);
  CHECK(jf["m"] == 2);
  FieldRef back = field_from_json(jf);
  CHECK(back->same_field(*f4));

  // Prime-field code: bare residues.
  LinearCode tet = fixture_code("tetracode");
  Json jt = code_to_json(tet);
  LinearCode tet2 = code_from_json(jt);
  CHECK(tet2.same_row_space(tet));

  // Extension-field code: entries as GF(p) coefficient arrays.
  LinearCode c4(f4, {{1, 2, 3}, {2, 1, 0}});
  Json jc = code_to_json(c4);
  CHECK(jc["rows"][0][1].is_array());
  LinearCode c4back = code_from_json(jc);
  CHECK(c4back.same_row_space(c4));
  // Raw indices are accepted on input too.
  Json raw = jc;
  raw["rows"] = Json::array({Json::array({1, 2, 3}), Json::array({2, 1, 0})});
  CHECK(code_from_json(raw).same_row_space(c4));

  CHECK_THROWS_WITH_AS(code_from_json(Json::object()),
                       doctest::Contains("RangeError"), Error);
  Json badentry = code_to_json(tet);
  badentry["rows"][0][0] = 9;  // outside GF(3)
  CHECK_THROWS_WITH_AS(code_from_json(badentry),
                       doctest::Contains("RangeError"), Error);
}

TEST_CASE("weight distribution round trips") {
  WeightDistribution w = fixture_code("hamming74").weight_distribution();
  Json j = wdist_to_json(w);
  CHECK(j["n"] == 7);
  CHECK(j["k"] == 4);
  CHECK(j["q"] == 2);
  WeightDistribution back = wdist_from_json(j);
  CHECK(back.counts == w.counts);
  CHECK(back.n == w.n);

  // Oversized counts travel as strings.
  WeightDistribution huge;
  huge.n = 1;
  huge.k = 1;
  huge.q = 2;
  huge.counts = {Int(1), int_pow(Int(2), 100)};
  WeightDistribution hback = wdist_from_json(wdist_to_json(huge));
  CHECK(hback.counts == huge.counts);

  Json bad = wdist_to_json(w);
  bad["counts"].erase(0);  // length no longer n + 1
  CHECK_THROWS_WITH_AS(wdist_from_json(bad), doctest::Contains("RangeError"),
                       Error);
}

TEST_CASE("polynomial round trips") {
  RationalPoly p{rat(1, 5), rat(2, 5), rat(2, 5)};
  CHECK(poly_from_json(poly_to_json(p)) == p);
  // Bare arrays and bare numbers are accepted.
  CHECK(poly_from_json(Json::parse("[1, 0, 2]")) ==
        RationalPoly{rat(1), rat(0), rat(2)});
  CHECK(poly_from_json(Json::parse("{\"coeffs\": [\"1/5\", \"2/5\", \"2/5\"]}")) ==
        p);
  CHECK(poly_from_json(Json::parse("[]")).is_zero());
  CHECK_THROWS_WITH_AS(poly_from_json(Json("x")), doctest::Contains("RangeError"),
                       Error);
}

TEST_CASE("analysis report serialization is re-readable") {
  AnalysisReport r = build_analysis_report(fixture_code("hamming74"));
  Json j = analysis_report_to_json(r);
  CHECK(j["weights"]["counts"][3] == 7);
  CHECK(j["fsd"]["zeta_fixed"] == true);
  CHECK(j["fsd"]["weight_equal"] == false);
  CHECK(j["rha"]["holds"] == true);
  CHECK(j["rha"]["method"] == "ExactSturm");
  CHECK(j["field_bound"]["holds"] == true);
  CHECK(j["zeta"]["r"] == 2);
  CHECK(j["elapsed_ms"].is_number());

  // Key blocks parse back to the exact originals.
  CHECK(wdist_from_json(j["weights"]).counts == r.weights.counts);
  CHECK(wdist_from_json(j["dual_weights"]).counts == r.dual_weights.counts);
  CHECK(poly_from_json(j["zeta"]["P"]) == r.zeta.P);
  CHECK(poly_from_json(j["zeta"]["D"]) == r.zeta.D);

  // Serialized code echo reconstructs the same row space.
  LinearCode echo = code_from_json(j["code"]);
  CHECK(echo.same_row_space(fixture_code("hamming74")));

  // Genus-0 codes skip the bound and say why.
  AnalysisReport mds = build_analysis_report(fixture_code("tetracode"));
  Json jm = analysis_report_to_json(mds);
  CHECK(jm["field_bound"].is_null());
  CHECK(jm["warnings"].size() == 1);
}

TEST_CASE("function field profile serialization") {
  FunctionFieldProfile p = profile_from_lpoly({1, 0, 4, 0, 4}, Int(2));
  Json j = ff_profile_to_json(p);
  CHECK(j["q"] == 2);
  CHECK(j["g"] == 2);
  CHECK(j["h"] == 9);
  FunctionFieldProfile back = ff_profile_from_json(j);
  CHECK(back.L == p.L);
  CHECK(back.h == p.h);
  CHECK(back.A == p.A);
  CHECK(back.h_seq == p.h_seq);
}

TEST_CASE("errors and parsing") {
  try {
    fail_validation("RangeError", "boom");
  } catch (const Error& e) {
    Json j = error_to_json(e);
    CHECK(j["error"]["code"] == "RangeError");
    CHECK(j["error"]["message"] == "boom");
    CHECK(e.kind() == ErrorKind::Validation);
  }
  try {
    fail_internal("ConsistencyFailure", "boom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Internal);
    CHECK(error_to_json(e)["error"]["code"] == "ConsistencyFailure");
  }

  CHECK(parse_json_text("{\"a\": 1}")["a"] == 1);
  CHECK_THROWS_WITH_AS(parse_json_text("{nope"), doctest::Contains("RangeError"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_json_text(""), doctest::Contains("RangeError"),
                       Error);
}
