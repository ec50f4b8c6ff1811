#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nonvanish/error.hpp"

namespace nonvanish {

// Canonical encoding of a field element: the fully flattened coefficient
// vector read as little-endian base-p digits (constant coefficient least
// significant). An element of a subfield in the tower has the same encoding
// in every field above it.
using Elem = std::uint64_t;

// Little-endian coefficient list over some field.
using Poly = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * A finite field: either F_p, or F_q[z]/(g) for a monic irreducible g over a
 * field F_q that is itself a Field. Towers are built by stacking extensions.
 *
 * Fields are immutable once built and are always handled through FieldPtr.
 * Arithmetic works on encoded elements; small fields (order <= 256) carry
 * precomputed addition and multiplication tables.
 */
class Field {
 public:
  static FieldPtr prime(std::uint64_t p);

  // Validates that the modulus is monic of degree >= 1 and irreducible over base.
  static FieldPtr extension(FieldPtr base, Poly modulus);

  // Rebuilds a tower from its prime and the list of moduli, bottom level first.
  static FieldPtr from_moduli(std::uint64_t p, const std::vector<Poly>& moduli);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return order_; }

  // Degree over the field one level below; 1 for a prime field.
  unsigned degree() const { return degree_; }

  // The field one level below, or null for a prime field.
  const FieldPtr& base() const { return base_; }

  // Order of the field Frobenius is taken relative to: the base order, or p
  // for a prime field.
  std::uint64_t base_order() const { return base_ ? base_->order() : p_; }

  bool is_prime() const { return base_ == nullptr; }

  // Top-level modulus over base(); empty for a prime field.
  const Poly& modulus() const { return modulus_; }

  // All moduli from the bottom of the tower up.
  std::vector<Poly> moduli() const;

  bool same_as(const Field& other) const;

  // True when `sub` equals this field or one of the fields below it.
  bool contains(const Field& sub) const;

  std::string describe() const;

  bool valid(Elem a) const { return a < order_; }
  void check(Elem a) const;

  Elem add(Elem a, Elem b) const {
    return tabulated() ? add_table_[a * order_ + b] : add_slow(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    return tabulated() ? mul_table_[a * order_ + b] : mul_slow(a, b);
  }
  Elem neg(Elem a) const { return tabulated() ? neg_table_[a] : neg_slow(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  // Throws ArithmeticError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // a^(base_order^j); the identity when j is a multiple of degree().
  Elem frobenius(Elem a, unsigned j) const;

  // Product of all degree() Frobenius conjugates. The result lies in base();
  // its encoding is returned unchanged.
  Elem norm(Elem a) const;

  // Coefficients over base(), length degree().
  Poly coefficients(Elem a) const;
  Elem from_coefficients(std::span<const Elem> coeffs) const;

 private:
  Field() = default;
  void build_tables();
  bool tabulated() const { return !mul_table_.empty(); }

  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;

  std::uint64_t p_ = 0;
  std::uint64_t order_ = 0;
  unsigned degree_ = 1;
  FieldPtr base_;
  Poly modulus_;

  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
};

/// An element bound to its field, with checked mixed-field arithmetic.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  static FieldElement decode(std::uint64_t code, FieldPtr field);
  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

  std::uint64_t encode() const { return value_; }
  Elem value() const { return value_; }
  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement frobenius(unsigned j) const;

  // Lands in field()->base() (or the prime field itself).
  FieldElement norm() const;

  std::vector<FieldElement> coefficients() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  const Field& same_field(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

bool is_prime_number(std::uint64_t n);

namespace poly {

// Drops trailing zero coefficients.
void trim(Poly& f);

// Degree of a trimmed polynomial; -1 for zero.
int degree(const Poly& f);

Poly mul(const Field& k, const Poly& a, const Poly& b);

// Remainder of a modulo the monic polynomial m.
Poly rem(const Field& k, Poly a, const Poly& m);

// Monic polynomial of the given degree whose lower coefficients are the
// base-q digits of `index` (constant term least significant).
Poly monic_from_index(const Field& k, unsigned degree, std::uint64_t index);

}  // namespace poly

// Trial division by every monic polynomial of degree <= deg(f)/2.
bool is_irreducible(const Field& base, const Poly& f);

// Smallest monic irreducible of the given degree in canonical order.
Poly find_irreducible(const Field& base, unsigned degree);

}  // namespace nonvanish
