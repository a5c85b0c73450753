#include "zetacode/field.hpp"

#include <map>

#include "zetacode/errors.hpp"

namespace zetacode {

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint32_t mod_inverse(uint32_t a, uint64_t p) {
  // Fermat: a^(p-2) mod p.
  uint64_t base = a % p, acc = 1, e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

// Deterministic moduli for extension fields with q <= 256 (ascending
// coefficients, constant term first, all verified irreducible at build).
const std::map<uint32_t, std::vector<uint32_t>>& builtin_moduli() {
  static const std::map<uint32_t, std::vector<uint32_t>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 0, 0, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {256, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {9, {1, 0, 1}},
      {27, {1, 2, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {243, {1, 2, 0, 0, 0, 1}},
      {25, {2, 0, 1}},
      {125, {3, 3, 0, 1}},
      {49, {1, 0, 1}},
      {121, {1, 0, 1}},
      {169, {2, 0, 1}},
  };
  return table;
}

using Digits = std::vector<uint32_t>;  // ascending coefficients over GF(p)

void trim_digits(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b, over GF(p).
Digits poly_mod(Digits a, const Digits& b, uint64_t p) {
  trim_digits(a);
  size_t db = b.size() - 1;
  while (a.size() > db) {
    uint64_t lead = a.back();
    size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (size_t i = 0; i <= db; ++i) {
        uint64_t sub = lead * b[i] % p;
        uint64_t cur = a[shift + i];
        a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
      }
    }
    a.pop_back();
    trim_digits(a);
  }
  return a;
}

Digits poly_mul_mod(const Digits& a, const Digits& b, const Digits& mod,
                    uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), mod, p);
}

// Trial division by every monic polynomial of degree 1..deg/2 — exhaustive
// irreducibility test (degree-1 pass doubles as the root check).
bool is_irreducible(const Digits& f, uint64_t p) {
  size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    // Enumerate monic divisor candidates of degree d by counting in base p.
    Digits cand(d + 1, 0);
    cand[d] = 1;
    uint64_t total = 1;
    for (size_t i = 0; i < d; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t v = idx;
      for (size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      if (poly_mod(f, cand, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldRef FieldSpec::make(uint64_t p, uint32_t m, std::vector<uint32_t> modulus) {
  if (!is_prime(p)) fail_validation("NonPrime", "p must be prime");
  if (m < 1) fail_validation("RangeError", "exponent m must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 16))
      fail_validation("UnsupportedSize", "field size exceeds 2^16");
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->m_ = m;
  spec->q_ = static_cast<uint32_t>(q);

  if (m == 1) {
    if (!modulus.empty())
      fail_validation("RangeError", "prime fields take no modulus");
  } else {
    if (modulus.empty()) {
      auto it = builtin_moduli().find(spec->q_);
      if (it == builtin_moduli().end())
        fail_validation("MissingModulus",
                        "no built-in modulus for this field size; supply one");
      modulus = it->second;
    }
    if (modulus.size() != static_cast<size_t>(m) + 1)
      fail_validation("ReducibleModulus", "modulus degree must equal m");
    for (auto& c : modulus) {
      if (c >= p)
        fail_validation("ReducibleModulus", "modulus coefficient out of range");
    }
    if (modulus.back() == 0)
      fail_validation("ReducibleModulus", "modulus leading coefficient is zero");
    if (modulus.back() != 1) {
      uint32_t inv = mod_inverse(modulus.back(), p);
      for (auto& c : modulus)
        c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p);
    }
    if (!is_irreducible(modulus, p))
      fail_validation("ReducibleModulus", "modulus factors over GF(p)");
    spec->modulus_ = modulus;
  }

  spec->build_tables();
  return spec;
}

std::vector<uint32_t> FieldSpec::to_coeffs(uint32_t a) const {
  std::vector<uint32_t> out(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    out[i] = static_cast<uint32_t>(a % p_);
    a = static_cast<uint32_t>(a / p_);
  }
  return out;
}

uint32_t FieldSpec::from_coeffs(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() > m_)
    fail_validation("RangeError", "element coefficient vector too long");
  uint64_t acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_)
      fail_validation("RangeError", "element coefficient out of range");
    acc = acc * p_ + coeffs[i];
  }
  return static_cast<uint32_t>(acc);
}

void FieldSpec::build_tables() {
  // Multiplication of raw indices through their digit vectors, used only to
  // bootstrap the exp table.
  auto raw_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1)
      return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    Digits da = to_coeffs(a), db = to_coeffs(b);
    trim_digits(da);
    trim_digits(db);
    Digits prod = poly_mul_mod(da, db, modulus_, p_);
    prod.resize(m_, 0);
    return from_coeffs(prod);
  };
  auto raw_pow = [&](uint32_t a, uint64_t e) -> uint32_t {
    uint32_t acc = 1, base = a;
    while (e) {
      if (e & 1) acc = raw_mul(acc, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return acc;
  };

  // Find a generator of the cyclic group of order q-1.
  auto factors = prime_factors(q_ - 1);
  uint32_t gen = 0;
  for (uint32_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (uint64_t f : factors) {
      if (raw_pow(cand, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0 && q_ == 2) gen = 1;  // trivial group
  if (gen == 0)
    fail_internal("ConsistencyFailure", "no multiplicative generator found");
  generator_ = gen;

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  uint32_t cur = 1;
  for (uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, gen);
  }
  if (cur != 1)
    fail_internal("ConsistencyFailure", "generator order mismatch");
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
  uint32_t out = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint64_t da = a % p_, db = b % p_;
    uint64_t s = da + db;
    if (s >= p_) s -= p_;
    out += static_cast<uint32_t>(s * mult);
    a = static_cast<uint32_t>(a / p_);
    b = static_cast<uint32_t>(b / p_);
    mult *= p_;
  }
  return out;
}

uint32_t FieldSpec::neg(uint32_t a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_ - a);
  uint32_t out = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint64_t da = a % p_;
    out += static_cast<uint32_t>((da == 0 ? 0 : p_ - da) * mult);
    a = static_cast<uint32_t>(a / p_);
    mult *= p_;
  }
  return out;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

uint32_t FieldSpec::inv(uint32_t a) const {
  if (a == 0) fail_validation("ZeroInverse", "inverse of zero field element");
  uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t l = static_cast<uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

FieldRef field_of_size(uint64_t q) {
  if (q < 2) fail_validation("RangeError", "field size must be at least 2");
  if (q > 65536)
    fail_validation("UnsupportedSize", "field sizes are capped at 2^16");
  uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  uint32_t m = 0;
  uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    fail_validation("NonPrime",
                    std::to_string(q) + " is not a prime power");
  return FieldSpec::make(p, m);
}

FieldElement::FieldElement(FieldRef field, uint32_t index)
    : field_(std::move(field)), index_(index) {
  if (!field_) fail_validation("RangeError", "element needs a field");
  if (index_ >= field_->q())
    fail_validation("RangeError", "element index outside the field");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_field(*o.field_))
    fail_validation("MixedFields", "operands live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_->add(index_, o.index_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_->sub(index_, o.index_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_->mul(index_, o.index_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_->neg(index_));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_->inv(index_));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_field(*o.field_) && index_ == o.index_;
}

}  // namespace zetacode
