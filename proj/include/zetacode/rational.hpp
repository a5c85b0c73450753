#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zetacode {

// Exact integer / rational scalars. All algebra outside the hot enumeration
// loops runs on these; intermediate values overflow 64 bits easily
// (Krawtchouk terms, q^k sums).
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) with C(n, k) = 0 for k < 0 or k > n.
Int binomial(long n, long k);

// q^e for e >= 0.
Int int_pow(const Int& q, unsigned long e);

// 1 + q + ... + q^{e-1} = (q^e - 1)/(q - 1), exact for any integer q != 1.
Int geometric_sum(const Int& q, unsigned long e);

// "num/den" (or bare "num") <-> canonical Rat. parse rejects zero
// denominators and garbage.
Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& value);

// True iff value has denominator 1.
bool is_integral(const Rat& value);

// Numerator of an integral rational (caller checks is_integral first).
Int to_integer(const Rat& value);

}  // namespace zetacode
