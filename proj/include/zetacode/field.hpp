#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace zetacode {

// GF(p^m), p prime, q = p^m <= 2^16. Elements are indices 0..q-1 encoding
// the coefficient vector (c_0, ..., c_{m-1}) over GF(p) in base p:
// index = sum c_i p^i. Index 0 is the zero element, index 1 is one.
// Multiplication runs on exp/log tables built from a primitive element.
class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

class FieldSpec {
 public:
  // modulus: ascending coefficients of a degree-m irreducible over GF(p),
  // length m+1; empty selects the built-in table entry (m > 1) or is the
  // natural choice for m = 1. Irreducibility is always re-verified.
  static FieldRef make(uint64_t p, uint32_t m,
                       std::vector<uint32_t> modulus = {});

  uint64_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // Element-level ops on raw indices (hot path for enumeration).
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // ZeroInverse on 0
  uint32_t pow(uint32_t a, uint64_t e) const;

  uint32_t generator() const { return generator_; }

  // index <-> coefficient vector over GF(p), ascending, length m.
  std::vector<uint32_t> to_coeffs(uint32_t a) const;
  uint32_t from_coeffs(const std::vector<uint32_t>& coeffs) const;

  bool same_field(const FieldSpec& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

 private:
  FieldSpec() = default;
  void build_tables();

  uint64_t p_ = 0;
  uint32_t m_ = 0;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;
  uint32_t generator_ = 0;
  std::vector<uint32_t> exp_;  // exp_[i] = g^i, length q-1
  std::vector<uint32_t> log_;  // log_[a] for a != 0
};

// GF(q) for a prime power q = p^m given only as its size; factors q and
// delegates to FieldSpec::make. NonPrime when q is not a prime power.
FieldRef field_of_size(uint64_t q);

// Value type carrying its field; the public, checked face of the raw index
// ops (MixedFields on cross-field arithmetic).
class FieldElement {
 public:
  FieldElement(FieldRef field, uint32_t index);

  uint32_t index() const { return index_; }
  const FieldRef& field() const { return field_; }
  std::vector<uint32_t> coeffs() const { return field_->to_coeffs(index_); }
  bool is_zero() const { return index_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;
  FieldRef field_;
  uint32_t index_;
};

}  // namespace zetacode
