#include "nonvanish/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <string>
#include <thread>

namespace nonvanish {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kNone / a) return kNone;
  return a * b;
}

/**
 * Walks form classes of one degree in canonical order, keeping the value of
 * the current form at every point up to date. Moving to the next class
 * changes only trailing coefficients, so most steps touch one digit.
 */
class ClassWalker {
 public:
  ClassWalker(const Field& field, std::size_t monomials, std::vector<Elem> monomial_values, std::size_t points)
      : k_(field),
        q_(field.order()),
        n_mono_(monomials),
        n_pts_(points),
        mono_vals_(std::move(monomial_values)),
        coeffs_(monomials, 0),
        values_(points, 0) {}

  void seek(std::uint64_t index) {
    std::size_t lead = n_mono_ - 1;
    std::uint64_t block = 1;
    while (index >= block) {
      index -= block;
      block *= q_;
      --lead;
    }
    std::fill(coeffs_.begin(), coeffs_.end(), 0);
    lead_ = lead;
    coeffs_[lead] = 1;
    for (std::size_t i = n_mono_; i-- > lead + 1;) {
      coeffs_[i] = index % q_;
      index /= q_;
    }
    recompute();
  }

  // False once the last class has been passed.
  bool advance() {
    std::size_t i = n_mono_ - 1;
    while (true) {
      if (i == lead_) {
        if (lead_ == 0) return false;
        std::fill(coeffs_.begin(), coeffs_.end(), 0);
        coeffs_[--lead_] = 1;
        recompute();
        return true;
      }
      const Elem old = coeffs_[i];
      const bool carry = old + 1 == q_;
      const Elem now = carry ? 0 : old + 1;
      bump(i, k_.sub(now, old));
      coeffs_[i] = now;
      if (!carry) return true;
      --i;
    }
  }

  std::span<const Elem> values() const { return values_; }
  std::span<const Elem> coefficients() const { return coeffs_; }

 private:
  void bump(std::size_t mono, Elem delta) {
    const Elem* col = mono_vals_.data() + mono;
    for (std::size_t p = 0; p < n_pts_; ++p, col += n_mono_) values_[p] = k_.add(values_[p], k_.mul(delta, *col));
  }

  void recompute() {
    for (std::size_t p = 0; p < n_pts_; ++p) {
      Elem v = 0;
      const Elem* row = mono_vals_.data() + p * n_mono_;
      for (std::size_t i = lead_; i < n_mono_; ++i)
        if (coeffs_[i]) v = k_.add(v, k_.mul(coeffs_[i], row[i]));
      values_[p] = v;
    }
  }

  const Field& k_;
  std::uint64_t q_;
  std::size_t n_mono_;
  std::size_t n_pts_;
  std::vector<Elem> mono_vals_;  // row per point, column per monomial
  std::vector<Elem> coeffs_;
  std::vector<Elem> values_;
  std::size_t lead_ = 0;
};

// Values of every monomial at every point, row-major by point.
std::vector<Elem> monomial_table(const Field& k, const std::vector<Exponents>& monos,
                                 const std::vector<ProjPoint>& pts) {
  std::vector<Elem> table;
  table.reserve(monos.size() * pts.size());
  for (const ProjPoint& p : pts) {
    for (const Exponents& e : monos) {
      Elem v = 1;
      for (std::size_t i = 0; i < e.size(); ++i) v = k.mul(v, k.pow(p[i], e[i]));
      table.push_back(v);
    }
  }
  return table;
}

// Splits [0, total) into `parts` contiguous ranges and runs fn(begin, end) on
// each, one thread per range.
void run_partitioned(std::uint64_t total, unsigned parts,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  parts = std::max(1u, parts);
  if (static_cast<std::uint64_t>(parts) > total) parts = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
  if (parts == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::jthread> workers;
  const std::uint64_t step = total / parts, extra = total % parts;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < parts; ++w) {
    const std::uint64_t end = begin + step + (w < extra ? 1 : 0);
    workers.emplace_back(fn, w, begin, end);
    begin = end;
  }
}

void check_budget(std::uint64_t classes, unsigned degree, const ScanOptions& options) {
  if (classes > options.budget)
    throw ResourceError("degree " + std::to_string(degree) + " needs " +
                        (classes == kNone ? std::string("more than 2^64") : std::to_string(classes)) +
                        " candidate forms, over the budget of " + std::to_string(options.budget));
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

std::uint64_t form_class_count(std::uint64_t q, std::uint64_t monomials) {
  std::uint64_t total = 0, term = 1;
  for (std::uint64_t i = 0; i < monomials; ++i) {
    if (term == kNone || total > kNone - term) return kNone;
    total += term;
    term = saturating_mul(term, q);
  }
  return total;
}

Form form_from_class(const FieldPtr& field, std::size_t vars, unsigned degree, std::uint64_t index) {
  const std::vector<Exponents> monos = enumerate_monomials(vars, degree);
  if (index >= form_class_count(field->order(), monos.size()))
    throw UsageError("form class index " + std::to_string(index) + " out of range");
  ClassWalker walker(*field, monos.size(), {}, 0);
  walker.seek(index);
  std::vector<std::pair<Exponents, Elem>> terms;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (walker.coefficients()[i]) terms.emplace_back(monos[i], walker.coefficients()[i]);
  return Form(field, vars, degree, terms);
}

std::uint64_t count_zeros(const Form& f, unsigned n) {
  if (f.is_zero()) throw UsageError("zero form has no well-defined zero set");
  if (f.vars() != n + 1)
    throw UsageError("form in " + std::to_string(f.vars()) + " variables on P^" + std::to_string(n));
  std::uint64_t zeros = 0;
  for (const ProjPoint& p : enumerate_space(f.field(), n))
    if (f.evaluate(p) == 0) ++zeros;
  return zeros;
}

bool is_nonvanishing(const Form& f, const PointSet& xs) {
  if (xs.empty()) throw UsageError("nonvanishing is not defined on an empty point set");
  if (f.vars() != xs.dimension() + 1)
    throw UsageError("form in " + std::to_string(f.vars()) + " variables checked on P^" +
                     std::to_string(xs.dimension()));
  return std::all_of(xs.begin(), xs.end(), [&](const ProjPoint& p) { return f.evaluate(p) != 0; });
}

std::optional<std::uint64_t> first_nonvanishing_class(const PointSet& xs, unsigned degree,
                                                      const ScanOptions& options) {
  const Field& k = *xs.field();
  const std::vector<Exponents> monos = enumerate_monomials(xs.dimension() + 1, degree);
  const std::uint64_t total = form_class_count(k.order(), monos.size());
  check_budget(total, degree, options);
  const std::vector<Elem> table = monomial_table(k, monos, xs.points());

  std::atomic<std::uint64_t> best{kNone};
  run_partitioned(total, options.threads, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    ClassWalker walker(k, monos.size(), table, xs.size());
    walker.seek(begin);
    for (std::uint64_t idx = begin; idx < end && idx < best.load(std::memory_order_relaxed); ++idx) {
      const auto vals = walker.values();
      if (std::find(vals.begin(), vals.end(), Elem{0}) == vals.end()) {
        atomic_min(best, idx);
        return;
      }
      if (idx + 1 < end) walker.advance();
    }
  });
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

NzCertificate exact_nz(const PointSet& xs, const ScanOptions& options, std::optional<unsigned> max_degree) {
  if (xs.empty()) throw UsageError("Nz is not defined for an empty point set");
  const unsigned limit = max_degree.value_or(xs.dimension() + 1);
  if (limit < 1) throw UsageError("max degree must be at least 1");
  std::vector<RefutedDegree> refuted;
  for (unsigned d = 1; d <= limit; ++d) {
    if (auto idx = first_nonvanishing_class(xs, d, options)) {
      Form witness = form_from_class(xs.field(), xs.dimension() + 1, d, *idx);
      if (!is_nonvanishing(witness, xs)) throw IntegrityError("scan witness vanishes on the point set");
      return {xs.field()->order(), xs.dimension(), xs.size(), d, std::move(witness), *idx, std::move(refuted)};
    }
    refuted.push_back({d, form_class_count(xs.field()->order(), binomial(xs.dimension() + d, d))});
  }
  throw ResourceError("no nonvanishing form of degree <= " + std::to_string(limit));
}

WarningReport verify_warning(const FieldPtr& field, unsigned n, unsigned d, const ScanOptions& options) {
  if (d < 1 || d > n)
    throw UsageError("Warning bound needs 1 <= d <= n, got d = " + std::to_string(d) + ", n = " + std::to_string(n));
  const Field& k = *field;
  const PointSet space = enumerate_space(field, n);
  const std::vector<Exponents> monos = enumerate_monomials(n + 1, d);
  const std::uint64_t total = form_class_count(k.order(), monos.size());
  check_budget(total, d, options);
  const std::vector<Elem> table = monomial_table(k, monos, space.points());

  const unsigned parts = std::max(1u, options.threads);
  std::vector<std::uint64_t> minima(parts, kNone);
  run_partitioned(total, parts, [&](std::size_t w, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    ClassWalker walker(k, monos.size(), table, space.size());
    walker.seek(begin);
    std::uint64_t local = kNone;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const auto vals = walker.values();
      local = std::min<std::uint64_t>(local, std::count(vals.begin(), vals.end(), Elem{0}));
      if (idx + 1 < end) walker.advance();
    }
    minima[w] = local;
  });

  const std::uint64_t min_zeros = *std::min_element(minima.begin(), minima.end());
  const std::uint64_t bound = projective_size(k.order(), n - d);
  return {k.order(), n, d, total, min_zeros, bound, min_zeros >= bound};
}

}  // namespace nonvanish
