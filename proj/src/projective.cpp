#include "nonvanish/projective.hpp"

#include <algorithm>
#include <string>

namespace nonvanish {

std::uint64_t projective_size(std::uint64_t q, unsigned n) {
  std::uint64_t total = 0, term = 1;
  for (unsigned i = 0; i <= n; ++i) {
    if (total > UINT64_MAX - term) throw UsageError("projective space too large");
    total += term;
    if (i < n) {
      if (term > UINT64_MAX / q) throw UsageError("projective space too large");
      term *= q;
    }
  }
  return total;
}

ProjPoint ProjPoint::canonicalize(FieldPtr field, std::vector<Elem> raw) {
  if (!field) throw UsageError("point without a field");
  if (raw.empty()) throw UsageError("point needs at least one coordinate");
  for (Elem c : raw) field->check(c);
  auto lead = std::find_if(raw.begin(), raw.end(), [](Elem c) { return c != 0; });
  if (lead == raw.end()) throw UsageError("the zero vector is not a projective point");
  if (*lead != 1) {
    const Elem scale = field->inv(*lead);
    for (auto it = lead; it != raw.end(); ++it) *it = field->mul(*it, scale);
  }
  return ProjPoint(std::move(field), std::move(raw));
}

std::size_t ProjPoint::leading_index() const {
  return static_cast<std::size_t>(
      std::find_if(coords_.begin(), coords_.end(), [](Elem c) { return c != 0; }) - coords_.begin());
}

bool ProjPoint::is_last_basis_point() const { return leading_index() == coords_.size() - 1; }

// ---------------------------------------------------------------------------

PointSet::PointSet(FieldPtr field, unsigned n, std::vector<ProjPoint> points)
    : field_(std::move(field)), n_(n), points_(std::move(points)) {
  if (!field_) throw UsageError("point set without a field");
  for (const ProjPoint& p : points_) {
    if (p.dimension() != n_)
      throw UsageError("point of dimension " + std::to_string(p.dimension()) + " in a set of dimension " +
                       std::to_string(n_));
    if (!p.field()->same_as(*field_)) throw UsageError("point over a different field");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const ProjPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool PointSet::is_full_space() const { return points_.size() == projective_size(field_->order(), n_); }

PointSet enumerate_space(const FieldPtr& field, unsigned n) {
  const std::uint64_t q = field->order();
  std::vector<ProjPoint> pts;
  pts.reserve(projective_size(q, n));
  for (std::size_t lead = n + 1; lead-- > 0;) {
    // Tail after the leading 1 runs through all of F_q^{n-lead}, last coordinate fastest.
    std::vector<Elem> v(n + 1, 0);
    v[lead] = 1;
    while (true) {
      pts.push_back(ProjPoint::canonicalize(field, v));
      std::size_t i = n;
      while (i > lead && ++v[i] == q) v[i--] = 0;
      if (i == lead) break;
    }
  }
  return PointSet(field, n, std::move(pts));
}

// ---------------------------------------------------------------------------

Elem determinant(const Field& k, std::size_t size, std::vector<Elem> m) {
  Elem det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot * size + col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < size; ++c) std::swap(m[pivot * size + c], m[col * size + c]);
      det = k.neg(det);
    }
    const Elem pv = m[col * size + col];
    det = k.mul(det, pv);
    const Elem pinv = k.inv(pv);
    for (std::size_t r = col + 1; r < size; ++r) {
      const Elem f = k.mul(m[r * size + col], pinv);
      if (f == 0) continue;
      for (std::size_t c = col; c < size; ++c)
        m[r * size + c] = k.sub(m[r * size + c], k.mul(f, m[col * size + c]));
    }
  }
  return det;
}

CoordChange::CoordChange(FieldPtr field, std::size_t size, std::vector<Elem> entries)
    : field_(std::move(field)), size_(size), entries_(std::move(entries)) {}

CoordChange::CoordChange(FieldPtr field, std::vector<std::vector<Elem>> rows)
    : field_(std::move(field)), size_(rows.size()) {
  if (!field_) throw UsageError("coordinate change without a field");
  if (size_ == 0) throw UsageError("empty coordinate change matrix");
  entries_.reserve(size_ * size_);
  for (const auto& row : rows) {
    if (row.size() != size_) throw UsageError("coordinate change matrix is not square");
    for (Elem e : row) {
      field_->check(e);
      entries_.push_back(e);
    }
  }
  if (determinant(*field_, size_, entries_) == 0) throw UsageError("coordinate change matrix is singular");
}

CoordChange CoordChange::identity(FieldPtr field, unsigned n) {
  std::vector<Elem> e((n + 1) * (n + 1), 0);
  for (unsigned i = 0; i <= n; ++i) e[i * (n + 1) + i] = 1;
  return CoordChange(std::move(field), n + 1, std::move(e));
}

std::vector<std::vector<Elem>> CoordChange::rows() const {
  std::vector<std::vector<Elem>> out(size_);
  for (std::size_t r = 0; r < size_; ++r)
    out[r].assign(entries_.begin() + r * size_, entries_.begin() + (r + 1) * size_);
  return out;
}

std::vector<Elem> CoordChange::multiply(std::span<const Elem> x) const {
  if (x.size() != size_)
    throw UsageError("dimension mismatch: matrix of size " + std::to_string(size_) + " applied to vector of length " +
                     std::to_string(x.size()));
  const Field& k = *field_;
  std::vector<Elem> y(size_, 0);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) y[r] = k.add(y[r], k.mul(at(r, c), x[c]));
  return y;
}

ProjPoint CoordChange::apply(const ProjPoint& x) const {
  if (!x.field()->same_as(*field_)) throw UsageError("coordinate change over a different field");
  return ProjPoint::canonicalize(field_, multiply(x.coords()));
}

PointSet CoordChange::apply(const PointSet& xs) const {
  if (xs.dimension() + 1 != size_) throw UsageError("dimension mismatch applying coordinate change to point set");
  std::vector<ProjPoint> out;
  out.reserve(xs.size());
  for (const ProjPoint& p : xs) out.push_back(apply(p));
  return PointSet(field_, xs.dimension(), std::move(out));
}

CoordChange CoordChange::inverse() const {
  const Field& k = *field_;
  const std::size_t n = size_;
  std::vector<Elem> a = entries_;
  std::vector<Elem> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot * n + col] == 0) ++pivot;  // invertible, so a pivot exists
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(inv[pivot * n + c], inv[col * n + c]);
    }
    const Elem pinv = k.inv(a[col * n + col]);
    for (std::size_t c = 0; c < n; ++c) {
      a[col * n + c] = k.mul(a[col * n + c], pinv);
      inv[col * n + c] = k.mul(inv[col * n + c], pinv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Elem f = a[r * n + col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r * n + c] = k.sub(a[r * n + c], k.mul(f, a[col * n + c]));
        inv[r * n + c] = k.sub(inv[r * n + c], k.mul(f, inv[col * n + c]));
      }
    }
  }
  return CoordChange(field_, n, std::move(inv));
}

CoordChange CoordChange::operator*(const CoordChange& other) const {
  if (other.size_ != size_ || !other.field_->same_as(*field_))
    throw UsageError("cannot compose coordinate changes of different shape or field");
  const Field& k = *field_;
  std::vector<Elem> e(size_ * size_, 0);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c)
      for (std::size_t m = 0; m < size_; ++m)
        e[r * size_ + c] = k.add(e[r * size_ + c], k.mul(at(r, m), other.at(m, c)));
  return CoordChange(field_, size_, std::move(e));
}

CoordChange change_to_last(const ProjPoint& p) {
  const Field& k = *p.field();
  const std::size_t size = p.coords().size();
  const std::size_t lead = p.leading_index();
  std::vector<std::vector<Elem>> rows(size, std::vector<Elem>(size, 0));
  for (std::size_t r = 0; r < size; ++r) rows[r][r] = 1;
  // y_j = x_j - p_j x_lead for j != lead
  for (std::size_t j = 0; j < size; ++j)
    if (j != lead && p[j] != 0) rows[j][lead] = k.neg(p[j]);
  std::swap(rows[lead], rows[size - 1]);
  return CoordChange(p.field(), std::move(rows));
}

ProjPoint project(const ProjPoint& x) {
  if (x.dimension() == 0) throw UsageError("cannot project from P^0");
  if (x.is_last_basis_point()) throw UsageError("projection undefined at center (0:...:0:1)");
  std::vector<Elem> c(x.coords().begin(), x.coords().end() - 1);
  return ProjPoint::canonicalize(x.field(), std::move(c));
}

PointSet project(const PointSet& xs) {
  if (xs.dimension() == 0) throw UsageError("cannot project from P^0");
  std::vector<ProjPoint> out;
  out.reserve(xs.size());
  for (const ProjPoint& p : xs) out.push_back(project(p));
  return PointSet(xs.field(), xs.dimension() - 1, std::move(out));
}

ProjPoint embed_tau(const ProjPoint& x, unsigned d) {
  if (d < 1) throw UsageError("embedding needs d >= 1");
  std::vector<Elem> c(d, 0);
  c.insert(c.end(), x.coords().begin(), x.coords().end());
  return ProjPoint::canonicalize(x.field(), std::move(c));
}

PointSet complement(const PointSet& xs) {
  std::vector<ProjPoint> out;
  for (const ProjPoint& p : enumerate_space(xs.field(), xs.dimension()))
    if (!xs.contains(p)) out.push_back(p);
  return PointSet(xs.field(), xs.dimension(), std::move(out));
}

std::optional<ProjPoint> find_missing(const PointSet& xs) {
  for (const ProjPoint& p : enumerate_space(xs.field(), xs.dimension()))
    if (!xs.contains(p)) return p;
  return std::nullopt;
}

}  // namespace nonvanish
