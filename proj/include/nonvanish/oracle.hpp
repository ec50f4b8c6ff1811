#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nonvanish/forms.hpp"
#include "nonvanish/projective.hpp"

namespace nonvanish {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

struct ScanOptions {
  // Upper limit on candidate form classes scanned at any single degree.
  std::uint64_t budget = kDefaultBudget;
  // Worker threads; the class range is split into this many contiguous parts.
  unsigned threads = 1;
};

struct RefutedDegree {
  unsigned degree;
  std::uint64_t candidates;  // every one vanishes somewhere on X
};

struct NzCertificate {
  std::uint64_t q;
  unsigned n;
  std::uint64_t size;
  unsigned nz;
  Form witness;
  std::uint64_t witness_index;  // position of the witness in the degree-nz scan
  std::vector<RefutedDegree> refuted;
};

struct WarningReport {
  std::uint64_t q;
  unsigned n;
  unsigned d;
  std::uint64_t forms_scanned;
  std::uint64_t min_zeros;
  std::uint64_t bound;  // 1 + q + ... + q^{n-d}
  bool pass;
};

// Number of forms up to scalar with the given number of monomials:
// (q^N - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t form_class_count(std::uint64_t q, std::uint64_t monomials);

// Candidate forms are the coefficient vectors over the graded-lex monomial
// list whose first nonzero entry is 1, ordered by reading the vector as a
// base-q integer with the first monomial most significant. Returns the one at
// `index`.
Form form_from_class(const FieldPtr& field, std::size_t vars, unsigned degree, std::uint64_t index);

// Projective zeros of f on P^n(F), F the coefficient field of f.
std::uint64_t count_zeros(const Form& f, unsigned n);

bool is_nonvanishing(const Form& f, const PointSet& xs);

// Index of the first candidate of the given degree that is nonvanishing on xs.
std::optional<std::uint64_t> first_nonvanishing_class(const PointSet& xs, unsigned degree,
                                                      const ScanOptions& options = {});

// Exact Nz(X) by scanning degrees 1, 2, ... up to max_degree (default n+1).
NzCertificate exact_nz(const PointSet& xs, const ScanOptions& options = {},
                       std::optional<unsigned> max_degree = std::nullopt);

// Minimum projective zero count over every form class of degree d <= n,
// compared against 1 + q + ... + q^{n-d}.
WarningReport verify_warning(const FieldPtr& field, unsigned n, unsigned d, const ScanOptions& options = {});

}  // namespace nonvanish
