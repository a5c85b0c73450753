#include <doctest.h>

#include <vector>

#include "support/corpus.hpp"
#include "zetacode/code.hpp"
#include "zetacode/errors.hpp"
#include "zetacode/field.hpp"
#include "zetacode/fixtures.hpp"

using namespace zetacode;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("fixture weight distributions are the classical ones") {
  CHECK(fixture_code("hamming74").weight_distribution().counts ==
        ints({1, 0, 0, 7, 7, 0, 0, 1}));
  CHECK(fixture_code("ext_hamming84").weight_distribution().counts ==
        ints({1, 0, 0, 0, 14, 0, 0, 0, 1}));
  CHECK(fixture_code("simplex73").weight_distribution().counts ==
        ints({1, 0, 0, 0, 7, 0, 0, 0}));
  CHECK(fixture_code("tetracode").weight_distribution().counts ==
        ints({1, 0, 0, 8, 0}));
  WeightDistribution golay = fixture_code("golay24").weight_distribution();
  CHECK(golay.counts[0] == 1);
  CHECK(golay.counts[8] == 759);
  CHECK(golay.counts[12] == 2576);
  CHECK(golay.counts[16] == 759);
  CHECK(golay.counts[24] == 1);
  Int total = 0;
  for (const Int& c : golay.counts) total += c;
  CHECK(total == int_pow(Int(2), 12));

  CHECK(fixture_code("rs", 3, 3, 2).weight_distribution().counts ==
        ints({1, 0, 6, 2}));
  CHECK(fixture_code("full", 2, 2).weight_distribution().counts ==
        ints({1, 2, 1}));
  CHECK_THROWS_WITH_AS(fixture_code("nonesuch"), doctest::Contains("RangeError"),
                       Error);
}

TEST_CASE("profiles and genus bookkeeping") {
  CodeProfile h = fixture_code("hamming74").profile();
  CHECK(h.n == 7);
  CHECK(h.k == 4);
  CHECK(h.d == 3);
  CHECK(h.g == 1);
  CHECK(h.k_dual == 3);
  CHECK(h.d_dual == 4);
  CHECK(h.g_dual == 1);
  CHECK(h.r() == 2);

  CodeProfile tet = fixture_code("tetracode").profile();
  CHECK(tet.g == 0);
  CHECK(tet.g_dual == 0);
  CHECK(tet.d == 3);
  CHECK(tet.d_dual == 3);

  CodeProfile golay = fixture_code("golay24").profile();
  CHECK(golay.d == 8);
  CHECK(golay.g == 5);
  CHECK(golay.r() == 10);

  // n - d - d_dual = r - 2 across the corpus.
  for (const LinearCode& c : testsupport::bijection_corpus(40)) {
    CodeProfile p = c.profile();
    CHECK(p.n - p.d - p.d_dual == p.r() - 2);
    CHECK(p.g >= 0);
    CHECK(p.g_dual >= 0);
  }
}

TEST_CASE("dual codes and the MacWilliams transform") {
  LinearCode ham = fixture_code("hamming74");
  LinearCode dual = ham.dual_code();
  CHECK(dual.k() == 3);
  // The dual's enumerated distribution is the simplex one, and matches the
  // transform of the primal distribution.
  CHECK(dual.weight_distribution().counts == ints({1, 0, 0, 0, 7, 0, 0, 0}));
  CHECK(macwilliams(ham.weight_distribution()).counts ==
        ints({1, 0, 0, 0, 7, 0, 0, 0}));
  // ... and transforming back recovers the primal.
  CHECK(macwilliams(macwilliams(ham.weight_distribution())).counts ==
        ham.weight_distribution().counts);

  // Double dual spans the original row space.
  CHECK(dual.dual_code().same_row_space(ham));
  CHECK_FALSE(dual.same_row_space(ham));

  // Self-dual fixtures: dual distribution equals the primal one.
  for (const char* name : {"ext_hamming84", "golay24", "tetracode"}) {
    LinearCode c = fixture_code(name);
    CHECK(macwilliams(c.weight_distribution()).counts ==
          c.weight_distribution().counts);
    CHECK(c.dual_code().same_row_space(c));
  }

  // Full space <-> zero code.
  WeightDistribution full = full_space_code(2, 2).weight_distribution();
  CHECK(macwilliams(full).counts == ints({1, 0, 0}));

  // MacWilliams agrees with dual enumeration across the corpus.
  for (const LinearCode& c : testsupport::bijection_corpus(25)) {
    CHECK(macwilliams(c.weight_distribution()).counts ==
          c.dual_code().weight_distribution().counts);
  }
}

TEST_CASE("support counts") {
  CHECK(fixture_code("hamming74").support_count() == 7);
  CHECK(fixture_code("ext_hamming84").support_count() == 14);
  CHECK(fixture_code("rs", 3, 3, 2).support_count() == 3);
  CHECK(fixture_code("golay24").support_count() == 759);
}

TEST_CASE("construction guards") {
  FieldRef f2 = field_of_size(2);
  CHECK_THROWS_WITH_AS(LinearCode(f2, {}), doctest::Contains("EmptyMatrix"),
                       Error);
  CHECK_THROWS_WITH_AS(LinearCode(f2, {{}}), doctest::Contains("EmptyMatrix"),
                       Error);
  CHECK_THROWS_WITH_AS(LinearCode(f2, {{1, 0}, {1}}),
                       doctest::Contains("LengthMismatch"), Error);
  CHECK_THROWS_WITH_AS(LinearCode(f2, {{1, 2}}),
                       doctest::Contains("RangeError"), Error);
  // Second coordinate is identically zero.
  CHECK_THROWS_WITH_AS(LinearCode(f2, {{1, 0, 1}}),
                       doctest::Contains("ZeroColumn"), Error);
  // All-zero generator has rank zero.
  CHECK_THROWS_WITH_AS(LinearCode(f2, {{0, 0}}),
                       doctest::Contains("EmptyMatrix"), Error);
  CHECK_THROWS_WITH_AS(full_space_code(2, 3).dual_code(),
                       doctest::Contains("TrivialDual"), Error);
  CHECK_THROWS_WITH_AS(fixture_code("golay24").weight_distribution(1 << 10),
                       doctest::Contains("BudgetExceeded"), Error);

  // Rank-deficient input reduces to a basis and says so.
  LinearCode dep(f2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK(dep.rank_reduced());
  CHECK(dep.k() == 2);
  CHECK(dep.weight_distribution().counts == ints({1, 0, 3, 0}));

  // Duplicate generator rows likewise.
  LinearCode dup(f2, {{1, 1}, {1, 1}});
  CHECK(dup.rank_reduced());
  CHECK(dup.k() == 1);
}

TEST_CASE("distribution validation") {
  WeightDistribution w = fixture_code("hamming74").weight_distribution();
  CHECK_NOTHROW(validate_distribution(w));

  WeightDistribution bad = w;
  bad.counts[0] = 0;
  CHECK_THROWS_WITH_AS(validate_distribution(bad),
                       doctest::Contains("InconsistentProfile"), Error);
  bad = w;
  bad.counts[3] = -1;
  CHECK_THROWS_WITH_AS(validate_distribution(bad),
                       doctest::Contains("InconsistentProfile"), Error);
  bad = w;
  bad.counts[3] = 8;  // breaks the q^k total
  CHECK_THROWS_WITH_AS(validate_distribution(bad),
                       doctest::Contains("InconsistentProfile"), Error);
  bad = w;
  bad.counts.pop_back();  // wrong length n
  CHECK_THROWS_WITH_AS(validate_distribution(bad),
                       doctest::Contains("InconsistentProfile"), Error);

  WeightDistribution w3 = fixture_code("tetracode").weight_distribution();
  WeightDistribution bad3 = w3;
  bad3.counts[3] = 7;
  bad3.counts[4] = 1;  // keeps the total but 2 does not divide 7
  CHECK_THROWS_WITH_AS(validate_distribution(bad3),
                       doctest::Contains("InconsistentProfile"), Error);
}

TEST_CASE("random codes are deterministic and well-formed") {
  LinearCode a = random_code(3, 8, 3, 42);
  LinearCode b = random_code(3, 8, 3, 42);
  CHECK(a.generator() == b.generator());
  CHECK(a.n() == 8);
  CHECK(a.k() == 3);
  CHECK_FALSE(a.rank_reduced());
  LinearCode c = random_code(3, 8, 3, 43);
  CHECK(c.generator() != a.generator());
  CHECK_THROWS_WITH_AS(random_code(2, 3, 4, 1), doctest::Contains("RangeError"),
                       Error);
  CHECK_THROWS_WITH_AS(random_code(2, 0, 0, 1), doctest::Contains("RangeError"),
                       Error);
}

TEST_CASE("reed-solomon family") {
  for (uint64_t q : {4ull, 5ull, 7ull}) {
    for (int n = 2; n <= static_cast<int>(q); ++n) {
      for (int k = 1; k <= n; ++k) {
        LinearCode rs = reed_solomon_code(q, n, k);
        CodeProfile p = rs.profile();
        CHECK(p.g == 0);  // MDS: d = n - k + 1
        CHECK(p.d == n - k + 1);
      }
    }
  }
  CHECK_THROWS_WITH_AS(reed_solomon_code(3, 4, 2),
                       doctest::Contains("ConstructionFailure"), Error);
  CHECK_THROWS_WITH_AS(reed_solomon_code(3, 2, 0),
                       doctest::Contains("ConstructionFailure"), Error);
}
