#include "nonvanish/forms.hpp"

#include <numeric>
#include <sstream>

namespace nonvanish {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors, larger first
}

namespace {

void monomials_rec(Exponents& cur, std::size_t pos, unsigned remaining, std::vector<Exponents>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    monomials_rec(cur, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Exponents> enumerate_monomials(std::size_t vars, unsigned degree) {
  if (vars == 0) throw UsageError("forms need at least one variable");
  std::vector<Exponents> out;
  Exponents cur(vars, 0);
  monomials_rec(cur, 0, degree, out);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

// ---------------------------------------------------------------------------

Form::Form(FieldPtr field, std::size_t vars, unsigned degree)
    : field_(std::move(field)), vars_(vars), degree_(degree) {
  if (!field_) throw UsageError("form without a field");
  if (vars_ == 0) throw UsageError("forms need at least one variable");
}

Form::Form(FieldPtr field, std::size_t vars, unsigned degree, const std::vector<std::pair<Exponents, Elem>>& terms)
    : Form(std::move(field), vars, degree) {
  for (const auto& [e, c] : terms) {
    if (e.size() != vars_)
      throw UsageError("monomial has " + std::to_string(e.size()) + " exponents, form has " + std::to_string(vars_) +
                       " variables");
    if (total_degree(e) != degree_)
      throw UsageError("monomial of degree " + std::to_string(total_degree(e)) + " in a form of degree " +
                       std::to_string(degree_));
    field_->check(c);
    Elem& slot = terms_[e];
    slot = field_->add(slot, c);
    if (slot == 0) terms_.erase(e);
  }
}

Form Form::linear(FieldPtr field, std::span<const Elem> coeffs) {
  std::vector<std::pair<Exponents, Elem>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    terms.emplace_back(std::move(e), coeffs[i]);
  }
  return Form(std::move(field), coeffs.size(), 1, terms);
}

Form Form::constant(FieldPtr field, std::size_t vars, Elem value) {
  return Form(std::move(field), vars, 0, {{Exponents(vars, 0), value}});
}

Elem Form::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

Elem Form::evaluate(std::span<const Elem> x) const {
  if (x.size() != vars_)
    throw UsageError("arity mismatch: form in " + std::to_string(vars_) + " variables evaluated at " +
                     std::to_string(x.size()) + " coordinates");
  const Field& k = *field_;
  for (Elem c : x) k.check(c);
  // Powers x_i^e for e <= degree, shared across terms.
  std::vector<std::vector<Elem>> powers(vars_, std::vector<Elem>(degree_ + 1, 1));
  for (std::size_t i = 0; i < vars_; ++i)
    for (unsigned e = 1; e <= degree_; ++e) powers[i][e] = k.mul(powers[i][e - 1], x[i]);
  Elem sum = 0;
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < vars_ && t != 0; ++i) t = k.mul(t, powers[i][e[i]]);
    sum = k.add(sum, t);
  }
  return sum;
}

Elem Form::evaluate(const ProjPoint& x) const {
  if (!field_->contains(*x.field()))
    throw UsageError("point field " + x.field()->describe() + " is not contained in " + field_->describe());
  return evaluate(x.coords());
}

void Form::require_compatible(const Form& other) const {
  if (!field_->same_as(*other.field_)) throw UsageError("forms over different fields");
  if (vars_ != other.vars_) throw UsageError("forms in different numbers of variables");
}

Form Form::operator+(const Form& other) const {
  require_compatible(other);
  if (degree_ != other.degree_)
    throw UsageError("cannot add forms of degree " + std::to_string(degree_) + " and " +
                     std::to_string(other.degree_));
  Form r = *this;
  for (const auto& [e, c] : other.terms_) {
    Elem& slot = r.terms_[e];
    slot = field_->add(slot, c);
    if (slot == 0) r.terms_.erase(e);
  }
  return r;
}

Form Form::operator*(const Form& other) const {
  require_compatible(other);
  const Field& k = *field_;
  Form r(field_, vars_, degree_ + other.degree_);
  Exponents e(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      Elem& slot = r.terms_[e];
      slot = k.add(slot, k.mul(ca, cb));
      if (slot == 0) r.terms_.erase(e);
    }
  }
  return r;
}

Form Form::scaled(Elem c) const {
  field_->check(c);
  Form r(field_, vars_, degree_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, field_->mul(v, c));
  return r;
}

bool operator==(const Form& a, const Form& b) {
  return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_ && a.field_->same_as(*b.field_);
}

// ---------------------------------------------------------------------------

Form lift_vars(const Form& f, std::size_t new_vars) {
  if (new_vars < f.vars()) throw UsageError("cannot lift to fewer variables");
  std::vector<std::pair<Exponents, Elem>> terms;
  for (const auto& [e, c] : f.terms()) {
    Exponents lifted = e;
    lifted.resize(new_vars, 0);
    terms.emplace_back(std::move(lifted), c);
  }
  return Form(f.field(), new_vars, f.degree(), terms);
}

Form pullback(const Form& f, const CoordChange& a) {
  if (a.size() != f.vars())
    throw UsageError("dimension mismatch: form in " + std::to_string(f.vars()) + " variables, change of size " +
                     std::to_string(a.size()));
  if (!f.field()->contains(*a.field())) throw UsageError("coordinate change field is not below the form's field");
  const std::size_t n = f.vars();
  // substituted[i] = sum_j A_ij x_j, with cached powers.
  std::vector<std::vector<Form>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = a.at(i, j);
    powers[i].push_back(Form::constant(f.field(), n, 1));
    powers[i].push_back(Form::linear(f.field(), row));
  }
  auto power = [&](std::size_t i, unsigned e) -> const Form& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };

  Form result(f.field(), n, f.degree());
  for (const auto& [e, c] : f.terms()) {
    Form term = Form::constant(f.field(), n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) term = term * power(i, e[i]);
    result = result + term;
  }
  return result;
}

Form restrict_coefficients(const Form& f) {
  const Field& k = *f.field();
  const FieldPtr& base = k.is_prime() ? f.field() : k.base();
  std::vector<std::pair<Exponents, Elem>> terms;
  for (const auto& [e, c] : f.terms()) {
    if (k.frobenius(c, 1) != c || !base->valid(c))
      throw IntegrityError("coefficient " + std::to_string(c) + " of " + to_string(f) + " does not lie in " +
                           base->describe());
    terms.emplace_back(e, c);
  }
  return Form(base, f.vars(), f.degree(), terms);
}

std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << '*';
      mono << "x_" << i;
      if (e[i] > 1) mono << '^' << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace nonvanish
