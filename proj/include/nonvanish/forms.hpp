#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nonvanish/field.hpp"
#include "nonvanish/projective.hpp"

namespace nonvanish {

// Exponent vector (e_0, ..., e_n) of a monomial.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Graded lexicographic order with x_0 > x_1 > ... > x_n; `a` comes first when
// it has larger total degree, or equal degree and a larger exponent at the
// first position where they differ.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// All C(vars-1+degree, degree) exponent vectors of the given degree, in
// graded-lex order.
std::vector<Exponents> enumerate_monomials(std::size_t vars, unsigned degree);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/**
 * A homogeneous polynomial over a finite field, stored sparsely as a map from
 * monomial to nonzero coefficient. Every stored monomial has total degree
 * degree(). The zero form (no terms) is representable and carries a declared
 * degree; operations that need a genuine form reject it.
 */
class Form {
 public:
  using Terms = std::map<Exponents, Elem, GradedLex>;

  // The zero form.
  Form(FieldPtr field, std::size_t vars, unsigned degree);

  // Duplicate monomials are summed and zero coefficients dropped. Throws
  // UsageError on arity or degree mismatch.
  Form(FieldPtr field, std::size_t vars, unsigned degree, const std::vector<std::pair<Exponents, Elem>>& terms);

  // Linear form sum_i coeffs[i] x_i.
  static Form linear(FieldPtr field, std::span<const Elem> coeffs);

  // Degree-0 form with a single constant term.
  static Form constant(FieldPtr field, std::size_t vars, Elem value);

  const FieldPtr& field() const { return field_; }
  std::size_t vars() const { return vars_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Elem coefficient(const Exponents& e) const;

  // Evaluates at raw coordinates given as elements of field() or of any field
  // below it in the tower.
  Elem evaluate(std::span<const Elem> x) const;

  // Evaluates at the canonical representative. Only "is the value zero" is
  // independent of the representative.
  Elem evaluate(const ProjPoint& x) const;

  Form operator+(const Form& other) const;
  Form operator*(const Form& other) const;
  Form scaled(Elem c) const;

  friend bool operator==(const Form& a, const Form& b);

 private:
  void require_compatible(const Form& other) const;

  FieldPtr field_;
  std::size_t vars_;
  unsigned degree_;
  Terms terms_;
};

// Same monomials with zero exponents on new trailing variables.
Form lift_vars(const Form& f, std::size_t new_vars);

// g(x) = f(A x): substitutes y_i = sum_j A_ij x_j. The matrix field must lie
// in the tower of f's coefficient field.
Form pullback(const Form& f, const CoordChange& a);

// Re-reads the coefficients of f over field()->base(). Throws IntegrityError
// if some coefficient is not fixed by Frobenius.
Form restrict_coefficients(const Form& f);

// Human-readable rendering, e.g. "x_0^2 + x_0*x_1 + x_1^2".
std::string to_string(const Form& f);

}  // namespace nonvanish
