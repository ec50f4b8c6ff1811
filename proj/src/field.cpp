#include "nonvanish/field.hpp"

#include <sstream>

namespace nonvanish {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableOrder = 256;

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > kMaxOrder / base) throw UsageError("field order exceeds 2^32");
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime_number(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) throw UsageError("field order exceeds 2^32");
  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->order_ = p;
  f->degree_ = 1;
  f->build_tables();
  return f;
}

FieldPtr Field::extension(FieldPtr base, Poly modulus) {
  if (!base) throw UsageError("extension of a null field");
  poly::trim(modulus);
  const int deg = poly::degree(modulus);
  if (deg < 1) throw UsageError("modulus must have degree >= 1");
  for (Elem c : modulus)
    if (!base->valid(c)) throw UsageError("modulus coefficient " + std::to_string(c) + " out of range");
  if (modulus.back() != 1) throw UsageError("modulus must be monic");
  if (!is_irreducible(*base, modulus)) throw UsageError("modulus is not irreducible over " + base->describe());

  std::shared_ptr<Field> f(new Field());
  f->p_ = base->characteristic();
  f->degree_ = static_cast<unsigned>(deg);
  f->order_ = checked_power(base->order(), f->degree_);
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

FieldPtr Field::from_moduli(std::uint64_t p, const std::vector<Poly>& moduli) {
  FieldPtr f = prime(p);
  for (const Poly& m : moduli) f = extension(f, m);
  return f;
}

std::vector<Poly> Field::moduli() const {
  std::vector<Poly> out;
  for (const Field* f = this; f->base_; f = f->base_.get()) out.insert(out.begin(), f->modulus_);
  return out;
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || order_ != other.order_ || degree_ != other.degree_) return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return modulus_ == other.modulus_ && base_->same_as(*other.base_);
}

bool Field::contains(const Field& sub) const {
  for (const Field* f = this; f; f = f->base_.get())
    if (f->same_as(sub)) return true;
  return false;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << order_;
  if (base_) {
    os << " = F_" << base_->order() << "[z]/(";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << ")";
  }
  return os.str();
}

void Field::check(Elem a) const {
  if (!valid(a))
    throw UsageError("element " + std::to_string(a) + " out of range for " + describe());
}

void Field::build_tables() {
  if (order_ > kTableOrder) return;
  const std::uint64_t q = order_;
  add_table_.resize(q * q);
  neg_table_.resize(q);
  std::vector<std::uint32_t> mul(q * q);
  for (Elem a = 0; a < q; ++a) {
    neg_table_[a] = static_cast<std::uint32_t>(neg_slow(a));
    for (Elem b = 0; b < q; ++b) {
      add_table_[a * q + b] = static_cast<std::uint32_t>(add_slow(a, b));
      mul[a * q + b] = static_cast<std::uint32_t>(mul_slow(a, b));
    }
  }
  // Assigned last: tabulated() switches on once the multiplication table is present.
  mul_table_ = std::move(mul);
}

Elem Field::add_slow(Elem a, Elem b) const {
  if (!base_) return (a + b) % p_;
  const std::uint64_t bq = base_->order();
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    r += base_->add(a % bq, b % bq) * scale;
    a /= bq;
    b /= bq;
    scale *= bq;
  }
  return r;
}

Elem Field::neg_slow(Elem a) const {
  if (!base_) return a == 0 ? 0 : p_ - a;
  const std::uint64_t bq = base_->order();
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    r += base_->neg(a % bq) * scale;
    a /= bq;
    scale *= bq;
  }
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (!base_) return (a * b) % p_;
  const Field& k = *base_;
  Poly prod = poly::mul(k, coefficients(a), coefficients(b));
  prod = poly::rem(k, std::move(prod), modulus_);
  prod.resize(degree_, 0);
  return from_coefficients(prod);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("division by zero in " + describe());
  return pow(a, order_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::frobenius(Elem a, unsigned j) const {
  j %= degree_;
  const std::uint64_t q = base_order();
  for (unsigned i = 0; i < j; ++i) a = pow(a, q);
  return a;
}

Elem Field::norm(Elem a) const {
  Elem n = 1;
  for (unsigned j = 0; j < degree_; ++j) n = mul(n, frobenius(a, j));
  if (n >= base_order() || frobenius(n, 1) != n)
    throw IntegrityError("norm " + std::to_string(n) + " is not fixed by Frobenius in " + describe());
  return n;
}

Poly Field::coefficients(Elem a) const {
  if (!base_) return {a};
  const std::uint64_t bq = base_->order();
  Poly c(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = a % bq;
    a /= bq;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const Elem> coeffs) const {
  if (coeffs.size() > degree_) throw UsageError("too many coefficients for " + describe());
  if (!base_) return coeffs.empty() ? 0 : coeffs[0] % p_;
  const std::uint64_t bq = base_->order();
  Elem r = 0, scale = 1;
  for (Elem c : coeffs) {
    base_->check(c);
    r += c * scale;
    scale *= bq;
  }
  return r;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw UsageError("field element without a field");
  field_->check(value_);
}

FieldElement FieldElement::decode(std::uint64_t code, FieldPtr field) {
  return {std::move(field), code};
}

const Field& FieldElement::same_field(const FieldElement& o) const {
  if (!field_->same_as(*o.field_))
    throw UsageError("mismatched fields: " + field_->describe() + " vs " + o.field_->describe());
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same_field(o).div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius(unsigned j) const { return {field_, field_->frobenius(value_, j)}; }

FieldElement FieldElement::norm() const {
  const Elem n = field_->norm(value_);
  return {field_->is_prime() ? field_ : field_->base(), n};
}

std::vector<FieldElement> FieldElement::coefficients() const {
  std::vector<FieldElement> out;
  const FieldPtr& k = field_->is_prime() ? field_ : field_->base();
  for (Elem c : field_->coefficients(value_)) out.emplace_back(k, c);
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.value_ == b.value_ && a.field_->same_as(*b.field_);
}

// ---------------------------------------------------------------------------

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly mul(const Field& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly rem(const Field& k, Poly a, const Poly& m) {
  const int dm = degree(m);
  if (dm < 0 || m[dm] != 1) throw UsageError("polynomial remainder needs a monic divisor");
  for (int i = degree(a); i >= dm; --i) {
    const Elem c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = k.sub(a[i - dm + j], k.mul(c, m[j]));
  }
  trim(a);
  return a;
}

Poly monic_from_index(const Field& k, unsigned degree, std::uint64_t index) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = index % k.order();
    index /= k.order();
  }
  f[degree] = 1;
  return f;
}

}  // namespace poly

bool is_irreducible(const Field& base, const Poly& f) {
  Poly g = f;
  poly::trim(g);
  const int n = poly::degree(g);
  if (n < 1) return false;
  for (unsigned d = 1; d <= static_cast<unsigned>(n) / 2; ++d) {
    const std::uint64_t count = checked_power(base.order(), d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly::rem(base, g, poly::monic_from_index(base, d, idx)).empty()) return false;
    }
  }
  return true;
}

Poly find_irreducible(const Field& base, unsigned degree) {
  if (degree < 1) throw UsageError("irreducible degree must be >= 1");
  const std::uint64_t count = checked_power(base.order(), degree);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = poly::monic_from_index(base, degree, idx);
    if (is_irreducible(base, f)) return f;
  }
  throw IntegrityError("no irreducible polynomial found");
}

}  // namespace nonvanish
