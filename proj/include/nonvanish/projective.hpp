#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nonvanish/field.hpp"

namespace nonvanish {

// Number of points of P^n(F_q): 1 + q + ... + q^n. Throws on overflow.
std::uint64_t projective_size(std::uint64_t q, unsigned n);

/// A point of P^n(F_q) stored as its canonical representative: the first
/// nonzero coordinate is 1.
class ProjPoint {
 public:
  // Scales raw homogeneous coordinates to canonical form. Throws UsageError
  // on the zero vector.
  static ProjPoint canonicalize(FieldPtr field, std::vector<Elem> raw);

  const FieldPtr& field() const { return field_; }
  unsigned dimension() const { return static_cast<unsigned>(coords_.size() - 1); }
  std::span<const Elem> coords() const { return coords_; }
  Elem operator[](std::size_t i) const { return coords_[i]; }

  // Index of the leading 1.
  std::size_t leading_index() const;

  // (0:...:0:1)
  bool is_last_basis_point() const;

  // Canonical order: coordinates read as a base-q digit string, a_0 most significant.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ <=> b.coords_;
  }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  ProjPoint(FieldPtr field, std::vector<Elem> coords) : field_(std::move(field)), coords_(std::move(coords)) {}

  FieldPtr field_;
  std::vector<Elem> coords_;
};

/// Sorted, deduplicated set of points of one P^n(F_q).
class PointSet {
 public:
  PointSet(FieldPtr field, unsigned n, std::vector<ProjPoint> points = {});

  const FieldPtr& field() const { return field_; }
  unsigned dimension() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const ProjPoint& p) const;

  // Same size as P^n(F_q).
  bool is_full_space() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.field_->same_as(*b.field_) && a.points_ == b.points_;
  }

 private:
  FieldPtr field_;
  unsigned n_;
  std::vector<ProjPoint> points_;
};

// All of P^n(F_q) in canonical order.
PointSet enumerate_space(const FieldPtr& field, unsigned n);

/// An invertible linear change of coordinates y = A x on P^n(F_q).
class CoordChange {
 public:
  // Row-major (n+1)x(n+1) matrix. Throws UsageError when singular.
  CoordChange(FieldPtr field, std::vector<std::vector<Elem>> rows);

  static CoordChange identity(FieldPtr field, unsigned n);

  const FieldPtr& field() const { return field_; }
  unsigned dimension() const { return static_cast<unsigned>(size_ - 1); }
  std::size_t size() const { return size_; }
  Elem at(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }
  std::vector<std::vector<Elem>> rows() const;

  // Matrix-vector product, no normalization.
  std::vector<Elem> multiply(std::span<const Elem> x) const;

  ProjPoint apply(const ProjPoint& x) const;
  PointSet apply(const PointSet& xs) const;

  CoordChange inverse() const;

  // Matrix product: (A * B) x = A (B x).
  CoordChange operator*(const CoordChange& other) const;

  friend bool operator==(const CoordChange& a, const CoordChange& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_ && a.field_->same_as(*b.field_);
  }

 private:
  CoordChange(FieldPtr field, std::size_t size, std::vector<Elem> entries);

  FieldPtr field_;
  std::size_t size_;
  std::vector<Elem> entries_;
};

// Determinant by Gaussian elimination.
Elem determinant(const Field& field, std::size_t size, std::vector<Elem> entries);

// Clears every other coordinate against the leading 1 of p, then swaps the
// leading position with the last one, so that A p = (0:...:0:1).
CoordChange change_to_last(const ProjPoint& p);

// Drops the last coordinate. Undefined at (0:...:0:1).
ProjPoint project(const ProjPoint& x);
PointSet project(const PointSet& xs);

// Prepends d zero coordinates: P^{n-d} -> P^n.
ProjPoint embed_tau(const ProjPoint& x, unsigned d);

PointSet complement(const PointSet& xs);

// Canonically smallest point of P^n(F_q) outside xs, if any.
std::optional<ProjPoint> find_missing(const PointSet& xs);

}  // namespace nonvanish
