#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankmetric {

// Encoded field element: coefficients c_0..c_{e-1} of the polynomial
// representative, packed as sum c_i p^i. For prime fields this is the
// residue itself.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^e) realized as F_p[x]/(modulus). Immutable after construction.
class Field {
 public:
  // Chooses the lowest monic irreducible of degree e, ordering candidates by
  // the packed value of their lower coefficients.
  static FieldPtr make(unsigned p, unsigned e);
  // Uses the given modulus (c_0..c_e, monic); rejects reducible polynomials.
  static FieldPtr make(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }
  // Coefficients c_0..c_e of the modulus; empty when e == 1.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  // Image of an integer in the prime subfield.
  Elem from_integer(long long v) const;
  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;

  // `GF(p^e; modulus=c_0,...,c_e)`; the modulus list is empty for prime fields.
  std::string describe() const;
  // Integers for prime fields, dotted coefficient tuples `c0.c1` otherwise.
  std::string format(Elem a) const;
  Elem parse_element(std::string_view text) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

  static bool is_prime(std::uint64_t v);
  static bool is_irreducible(unsigned p, std::span<const unsigned> poly);

 private:
  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

  Elem poly_mul(Elem a, Elem b) const;
  void build_tables();

  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  // Zech-free log tables, present for extension fields with q <= 2^16.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

// Value-type element carrying its field. Hot loops work on raw Elem with the
// Field methods; this type is for API-level values.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;

  bool operator==(const FieldElement& o) const { return same_field(field_, o.field_) && value_ == o.value_; }

  std::string str() const { return field_->format(value_); }

 private:
  const Field& check(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

}  // namespace rankmetric
