#include "zetacode/poly.hpp"

#include <algorithm>

#include "zetacode/errors.hpp"

namespace zetacode {

RationalPoly::RationalPoly(std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<Rat> coeffs)
    : coeffs_(coeffs) {
  trim();
}

RationalPoly RationalPoly::constant(const Rat& c) {
  return RationalPoly(std::vector<Rat>{c});
}

RationalPoly RationalPoly::monomial(const Rat& c, int e) {
  std::vector<Rat> v(static_cast<size_t>(e) + 1, Rat(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rat RationalPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return zero();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::compose_scale(const Rat& c) const {
  std::vector<Rat> out(coeffs_);
  Rat p = 1;
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] *= p;
    p *= c;
  }
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  return *this + (-o);
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rat> out(coeffs_);
  for (auto& c : out) c = -c;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const Rat& s) const {
  std::vector<Rat> out(coeffs_);
  for (auto& c : out) c *= s;
  return RationalPoly(std::move(out));
}

PolyDivMod RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero())
    fail_validation("ZeroPolynomial", "division by the zero polynomial");
  std::vector<Rat> rem(coeffs_);
  int dd = divisor.degree();
  std::vector<Rat> quot;
  if (degree() >= dd) quot.assign(static_cast<size_t>(degree() - dd) + 1, Rat(0));
  const Rat& lead = divisor.coeffs_.back();
  for (int i = degree(); i >= dd; --i) {
    Rat c = rem[static_cast<size_t>(i)] / lead;
    if (c == 0) continue;
    quot[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<size_t>(j)];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly exact_divide(const RationalPoly& num, const RationalPoly& den) {
  auto [q, r] = num.divmod(den);
  if (!r.is_zero())
    fail_validation("InexactDivision", "polynomial division left a remainder");
  return q;
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.coeffs().back() != 1)
    a = a * (Rat(1) / a.coeffs().back());
  return a;
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  RationalPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_divide(p, g);
}

RationalPoly q_reciprocal_transform(const RationalPoly& p, const Int& q, int g,
                                    int g_total) {
  if (p.degree() > g_total)
    fail_validation("DegreeOverflow",
                    "degree exceeds the reciprocal-transform exponent");
  std::vector<Rat> out(static_cast<size_t>(g_total) + 1, Rat(0));
  // t^{g_total} q^g sum a_i (qt)^{-i}: coefficient of t^j is a_{g_total-j} q^{g-(g_total-j)}.
  for (int j = 0; j <= g_total; ++j) {
    Rat a = p.coeff(g_total - j);
    if (a == 0) continue;
    int e = g - (g_total - j);
    Rat scale = e >= 0 ? Rat(int_pow(q, static_cast<unsigned long>(e)))
                       : Rat(1) / Rat(int_pow(q, static_cast<unsigned long>(-e)));
    out[static_cast<size_t>(j)] = a * scale;
  }
  return RationalPoly(std::move(out));
}

namespace {

int sign_of(const Rat& v) { return sgn(v); }

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain;
  chain.push_back(p);
  RationalPoly d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.back().degree() > 0) {
    RationalPoly r = chain[chain.size() - 2].divmod(chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int variations_at(const std::vector<RationalPoly>& chain, const Rat& x) {
  int v = 0;
  int prev = 0;
  for (const auto& s : chain) {
    int cur = sign_of(s.evaluate(x));
    if (cur == 0) continue;
    if (prev != 0 && cur != prev) ++v;
    prev = cur;
  }
  return v;
}

// Sign of s(x) as x -> +inf (dir = +1) or -inf (dir = -1).
int variations_at_infinity(const std::vector<RationalPoly>& chain, int dir) {
  int v = 0;
  int prev = 0;
  for (const auto& s : chain) {
    if (s.is_zero()) continue;
    int cur = sign_of(s.coeffs().back());
    if (dir < 0 && s.degree() % 2 == 1) cur = -cur;
    if (prev != 0 && cur != prev) ++v;
    prev = cur;
  }
  return v;
}

}  // namespace

int sturm_count(const RationalPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero())
    fail_validation("ZeroPolynomial", "root counting needs a nonzero polynomial");
  if (!(lo < hi)) return 0;
  RationalPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int sturm_count_all(const RationalPoly& p) {
  if (p.is_zero())
    fail_validation("ZeroPolynomial", "root counting needs a nonzero polynomial");
  RationalPoly sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

TruncatedSeries series_div(const RationalPoly& num, const RationalPoly& den,
                           int order) {
  if (den.coeff(0) == 0)
    fail_validation("NonUnitDenominator",
                    "series division needs a unit constant term");
  if (order < 0) return {};
  std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order; ++i) {
    Rat acc = num.coeff(i);
    for (int j = 1; j <= i; ++j) acc -= den.coeff(j) * out[static_cast<size_t>(i - j)];
    out[static_cast<size_t>(i)] = acc / den.coeff(0);
  }
  return {std::move(out)};
}

RationalPoly one_minus_t_one_minus_qt(const Int& q) {
  return RationalPoly{Rat(1), Rat(-1 - q), Rat(q)};
}

}  // namespace zetacode
