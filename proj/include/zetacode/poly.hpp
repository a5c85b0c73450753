#pragma once

#include <initializer_list>
#include <vector>

#include "zetacode/rational.hpp"

namespace zetacode {

struct PolyDivMod;

// Dense univariate polynomial over Q, coefficients ascending, leading zeros
// trimmed. The zero polynomial is the empty list (degree() == -1).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs);
  RationalPoly(std::initializer_list<Rat> coeffs);

  static RationalPoly zero() { return RationalPoly(); }
  static RationalPoly constant(const Rat& c);
  // c * t^e
  static RationalPoly monomial(const Rat& c, int e);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // coefficient of t^i, 0 outside the stored range.
  Rat coeff(int i) const;

  Rat evaluate(const Rat& x) const;
  RationalPoly derivative() const;
  // P(c * t)
  RationalPoly compose_scale(const Rat& c) const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rat& s) const;
  RationalPoly operator-() const;
  bool operator==(const RationalPoly& o) const = default;

  // Quotient and remainder with deg(rem) < deg(divisor).
  PolyDivMod divmod(const RationalPoly& divisor) const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct PolyDivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

// Division that must be exact; throws InexactDivision otherwise.
RationalPoly exact_divide(const RationalPoly& num, const RationalPoly& den);

// gcd made monic; gcd(0, 0) = 0.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

// P with repeated roots collapsed: P / gcd(P, P').
RationalPoly squarefree_part(const RationalPoly& p);

// t^{g_total} * q^g * P(1/(q t)). Exact polynomial; requires
// deg P <= g_total (DegreeOverflow). Applying again with exponents
// (g', g_total), g + g' = g_total, inverts it.
RationalPoly q_reciprocal_transform(const RationalPoly& p, const Int& q, int g,
                                    int g_total);

// Number of distinct real roots of P in (lo, hi], by Sturm sign-variation
// counting on the squarefree part. Exact. Throws ZeroPolynomial on P == 0.
int sturm_count(const RationalPoly& p, const Rat& lo, const Rat& hi);

// Number of distinct real roots of P on all of R (Sturm at +-infinity).
int sturm_count_all(const RationalPoly& p);

// Formal power series cut at order N (N+1 coefficients).
struct TruncatedSeries {
  std::vector<Rat> coeffs;  // size order + 1
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Coefficients of num/den through t^N; den(0) != 0 (NonUnitDenominator).
TruncatedSeries series_div(const RationalPoly& num, const RationalPoly& den,
                           int order);

// (1 - t)(1 - q t), the genus-reduction denominator used everywhere.
RationalPoly one_minus_t_one_minus_qt(const Int& q);

}  // namespace zetacode
