#pragma once

#include <cstdint>

#include "nonvanish/projective.hpp"

namespace nonvanish {

struct BoundsReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint64_t size = 0;
  unsigned d1 = 0;  // lower bound on Nz
  unsigned d2 = 0;  // upper bound on Nz

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

// Least d >= 1 with size <= q + q^2 + ... + q^d.
unsigned upper_bound_d2(std::uint64_t size, std::uint64_t q, unsigned n);

// Largest d >= 1 with q^{n-d+2} + ... + q^n < size (the sum is empty, hence 0,
// for d <= 1).
unsigned lower_bound_d1(std::uint64_t size, std::uint64_t q, unsigned n);

BoundsReport compute_bounds(std::uint64_t size, std::uint64_t q, unsigned n);
BoundsReport compute_bounds(const PointSet& xs);

}  // namespace nonvanish
