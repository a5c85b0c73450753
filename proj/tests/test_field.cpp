#include <doctest.h>

#include <cstdint>
#include <vector>

#include "zetacode/errors.hpp"
#include "zetacode/field.hpp"

using namespace zetacode;

namespace {

// Exhaustive ring/field axioms. Triple-loop laws only up to a size cutoff.
void check_field_axioms(const FieldRef& f, uint32_t triple_cutoff = 64) {
  const uint32_t q = f->q();
  REQUIRE(q >= 2);
  // Additive/multiplicative identities and inverses.
  for (uint32_t a = 0; a < q; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->mul(a, 0) == 0);
    CHECK(f->add(a, f->neg(a)) == 0);
    CHECK(f->sub(a, a) == 0);
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
  }
  // Commutativity.
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = a; b < q; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
    }
  if (q <= triple_cutoff) {
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
  }
  // The multiplicative group is cyclic of order q - 1, generated by
  // generator(); every nonzero element appears exactly once among its powers.
  std::vector<bool> seen(q, false);
  uint32_t g = f->generator();
  uint32_t x = 1;
  for (uint32_t i = 0; i + 1 < q; ++i) {
    CHECK(!seen[x]);
    seen[x] = true;
    x = f->mul(x, g);
  }
  CHECK(x == 1);
  // index <-> coefficient round trip.
  for (uint32_t a = 0; a < q; ++a) {
    auto cs = f->to_coeffs(a);
    CHECK(cs.size() == f->m());
    CHECK(f->from_coeffs(cs) == a);
  }
}

}  // namespace

TEST_CASE("prime fields") {
  FieldRef f2 = FieldSpec::make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->add(1, 1) == 0);
  FieldRef f3 = FieldSpec::make(3, 1);
  CHECK(f3->inv(2) == 2);
  CHECK(f3->mul(2, 2) == 1);
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 251ull})
    check_field_axioms(FieldSpec::make(p, 1));
}

TEST_CASE("extension field arithmetic matches the defining relation") {
  // GF(4) with x^2 + x + 1: the class of x is index 2 (coeffs (0,1)) and
  // x * x = x + 1, which is index 3.
  FieldRef f4 = FieldSpec::make(2, 2);
  CHECK(f4->mul(2, 2) == 3);
  CHECK(f4->mul(2, 3) == 1);  // x * (x+1) = x^2 + x = 1

  // GF(9) via a non-monic irreducible 2x^2 + 2x + 1 normalizes to
  // x^2 + x + 2, so x * x = -x - 2 = 2x + 1, index 7.
  FieldRef f9 = FieldSpec::make(3, 2, {1, 2, 2});
  CHECK(f9->mul(3, 3) == 7);
  check_field_axioms(f9);

  // Explicit modulus equal to the built-in one gives identical tables.
  FieldRef f8a = FieldSpec::make(2, 3);
  FieldRef f8b = FieldSpec::make(2, 3, f8a->modulus());
  for (uint32_t a = 0; a < 8; ++a)
    for (uint32_t b = 0; b < 8; ++b) CHECK(f8a->mul(a, b) == f8b->mul(a, b));
}

TEST_CASE("axioms hold for every built-in extension field") {
  for (uint64_t q : {4ull, 8ull, 16ull, 32ull, 64ull, 128ull, 256ull, 9ull,
                     27ull, 81ull, 243ull, 25ull, 125ull, 49ull, 121ull, 169ull})
    check_field_axioms(field_of_size(q));
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_WITH_AS(FieldSpec::make(4, 1), doctest::Contains("NonPrime"),
                       Error);
  CHECK_THROWS_WITH_AS(FieldSpec::make(6, 1), doctest::Contains("NonPrime"),
                       Error);
  // x^2 + 1 = (x + 1)^2 over GF(2).
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 2, {1, 0, 1}),
                       doctest::Contains("ReducibleModulus"), Error);
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 2, {1, 1}),
                       doctest::Contains("ReducibleModulus"), Error);
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 2, {1, 1, 2}),
                       doctest::Contains("ReducibleModulus"), Error);
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 17),
                       doctest::Contains("UnsupportedSize"), Error);
  // No built-in modulus stored for GF(2^13).
  CHECK_THROWS_WITH_AS(FieldSpec::make(2, 13),
                       doctest::Contains("MissingModulus"), Error);

  CHECK_THROWS_WITH_AS(field_of_size(1), doctest::Contains("RangeError"),
                       Error);
  CHECK_THROWS_WITH_AS(field_of_size(0), doctest::Contains("RangeError"),
                       Error);
  CHECK_THROWS_WITH_AS(field_of_size(6), doctest::Contains("NonPrime"), Error);
  CHECK_THROWS_WITH_AS(field_of_size(12), doctest::Contains("NonPrime"), Error);
  CHECK_THROWS_WITH_AS(field_of_size(1 << 17),
                       doctest::Contains("UnsupportedSize"), Error);
  CHECK(field_of_size(49)->p() == 7);
  CHECK(field_of_size(49)->m() == 2);
  CHECK(field_of_size(125)->m() == 3);

  FieldRef f2 = FieldSpec::make(2, 1);
  CHECK_THROWS_WITH_AS(f2->inv(0), doctest::Contains("ZeroInverse"), Error);
}

TEST_CASE("field elements carry their field") {
  FieldRef f4 = field_of_size(4);
  FieldElement x(f4, 2);
  CHECK((x * x) == FieldElement(f4, 3));
  CHECK((x + x).is_zero());
  CHECK((-x) == x);
  CHECK(x.inverse() * x == FieldElement(f4, 1));
  CHECK(x.coeffs() == std::vector<uint32_t>{0, 1});

  FieldRef f3 = field_of_size(3);
  FieldElement y(f3, 2);
  CHECK_THROWS_WITH_AS(x + y, doctest::Contains("MixedFields"), Error);
  CHECK_THROWS_WITH_AS(FieldElement(f3, 5), doctest::Contains("RangeError"),
                       Error);
}
