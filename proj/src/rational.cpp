#include "zetacode/rational.hpp"

#include "zetacode/errors.hpp"

namespace zetacode {

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Int int_pow(const Int& q, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), e);
  return out;
}

Int geometric_sum(const Int& q, unsigned long e) {
  Int acc = 0;
  Int term = 1;
  for (unsigned long i = 0; i < e; ++i) {
    acc += term;
    term *= q;
  }
  return acc;
}

Rat parse_rational(const std::string& text) {
  Rat value;
  if (text.empty() || value.set_str(text, 10) != 0)
    fail_validation("RangeError", "not a rational: '" + text + "'");
  if (value.get_den() == 0)
    fail_validation("RangeError", "zero denominator: '" + text + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rat& value) { return value.get_str(); }

bool is_integral(const Rat& value) { return value.get_den() == 1; }

Int to_integer(const Rat& value) { return value.get_num(); }

}  // namespace zetacode
