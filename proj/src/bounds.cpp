#include "nonvanish/bounds.hpp"

#include <string>

namespace nonvanish {

namespace {

void check_domain(std::uint64_t size, std::uint64_t q, unsigned n) {
  if (q < 2) throw UsageError("field order must be at least 2");
  const std::uint64_t full = projective_size(q, n);
  if (size < 1 || size > full)
    throw UsageError("point count " + std::to_string(size) + " outside [1, " + std::to_string(full) + "]");
}

}  // namespace

unsigned upper_bound_d2(std::uint64_t size, std::uint64_t q, unsigned n) {
  check_domain(size, q, n);
  // The loop stops by d = n+1; q^{n+1} may not fit in 64 bits.
  unsigned __int128 sum = 0, term = 1;
  for (unsigned d = 1;; ++d) {
    term *= q;
    sum += term;
    if (size <= sum) return d;
  }
}

unsigned lower_bound_d1(std::uint64_t size, std::uint64_t q, unsigned n) {
  check_domain(size, q, n);
  // sum(d) = q^{n-d+2} + ... + q^n grows as d increases; sum(n+2) is the
  // whole space and is never < size, so d stays <= n+1.
  unsigned d = 1;
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (unsigned i = 0; i < n; ++i) term *= q;  // q^n
  while (d <= n) {
    // Moving from d to d+1 adds the term q^{n-d+1}.
    const std::uint64_t next = sum + term;
    if (!(next < size)) break;
    sum = next;
    ++d;
    term /= q;
  }
  return d;
}

BoundsReport compute_bounds(std::uint64_t size, std::uint64_t q, unsigned n) {
  return {q, n, size, lower_bound_d1(size, q, n), upper_bound_d2(size, q, n)};
}

BoundsReport compute_bounds(const PointSet& xs) {
  return compute_bounds(xs.size(), xs.field()->order(), xs.dimension());
}

}  // namespace nonvanish
