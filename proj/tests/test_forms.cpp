#include <doctest.h>

#include <random>

#include "nonvanish/forms.hpp"

using namespace nonvanish;

namespace {

FieldPtr f2() { return Field::prime(2); }
FieldPtr f3() { return Field::prime(3); }
FieldPtr f4() { return Field::extension(f2(), {1, 1, 1}); }

Form lin(const FieldPtr& k, std::vector<Elem> c) { return Form::linear(k, c); }

Form random_form(const FieldPtr& k, std::size_t vars, unsigned degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, k->order() - 1);
  std::vector<std::pair<Exponents, Elem>> terms;
  for (const Exponents& e : enumerate_monomials(vars, degree)) terms.emplace_back(e, pick(rng));
  return Form(k, vars, degree, terms);
}

CoordChange random_invertible(const FieldPtr& k, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, k->order() - 1);
  while (true) {
    std::vector<std::vector<Elem>> rows(n + 1, std::vector<Elem>(n + 1));
    for (auto& r : rows)
      for (auto& e : r) e = pick(rng);
    try {
      return CoordChange(k, rows);
    } catch (const UsageError&) {
    }
  }
}

ProjPoint pt(const FieldPtr& k, std::vector<Elem> c) { return ProjPoint::canonicalize(k, std::move(c)); }

}  // namespace

TEST_CASE("evaluate examples") {
  auto k = f2();
  const Form q = lin(k, {1, 0}) * lin(k, {1, 0}) + lin(k, {1, 0}) * lin(k, {0, 1}) + lin(k, {0, 1}) * lin(k, {0, 1});
  CHECK(q.evaluate(pt(k, {1, 1})) == 1);
  CHECK(lin(k, {1, 0}).evaluate(pt(k, {0, 1})) == 0);
  CHECK(lin(k, {1, 1, 1, 1}).evaluate(pt(k, {1, 1, 1, 1})) == 0);
  CHECK_THROWS_AS(q.evaluate(pt(k, {1, 1, 0})), UsageError);
  CHECK_THROWS_AS(lin(k, {1, 0}).evaluate(pt(f3(), {1, 0})), UsageError);
}

TEST_CASE("forms over an extension evaluate at base-field points") {
  const Form f = lin(f4(), {1, 2});  // x_0 + y x_1
  CHECK(f.evaluate(pt(f2(), {1, 1})) == 3);
}

TEST_CASE("homogeneity under scaling (exhaustive)") {
  std::mt19937_64 rng(3);
  for (const FieldPtr& k : {f2(), f3(), f4(), Field::prime(5)}) {
    for (unsigned d = 1; d <= 3; ++d) {
      const Form f = random_form(k, 3, d, rng);
      for (const ProjPoint& p : enumerate_space(k, 2)) {
        const Elem base = f.evaluate(p.coords());
        for (Elem lambda = 1; lambda < k->order(); ++lambda) {
          std::vector<Elem> scaled;
          for (Elem c : p.coords()) scaled.push_back(k->mul(lambda, c));
          REQUIRE(f.evaluate(scaled) == k->mul(k->pow(lambda, d), base));
        }
      }
    }
  }
}

TEST_CASE("form arithmetic examples") {
  // (x_0 + y x_1)(x_0 + x_1 + y x_1) = (x_0 + y x_1)(x_0 + (1+y) x_1) over F_4
  auto k4 = f4();
  const Form prod = lin(k4, {1, 2}) * lin(k4, {1, 3});
  const Form expected(k4, 2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(prod == expected);

  auto k = f2();
  const Form f = lin(k, {1, 1});
  CHECK((f + f).is_zero());
  CHECK((f + f).degree() == 1);
  CHECK(f * f == Form(k, 2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK_THROWS_AS(f + f * f, UsageError);
  CHECK_THROWS_AS(f * lin(k, {1, 1, 1}), UsageError);
}

TEST_CASE("ring laws at matching degrees") {
  std::mt19937_64 rng(5);
  for (const FieldPtr& k : {f2(), f3(), f4()}) {
    for (int t = 0; t < 20; ++t) {
      const Form a = random_form(k, 3, 2, rng), b = random_form(k, 3, 2, rng), c = random_form(k, 3, 1, rng);
      CHECK(a + b == b + a);
      CHECK(a * c == c * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * c).degree() == 3);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("enumerate_monomials") {
  CHECK(enumerate_monomials(3, 2).size() == 6);
  CHECK(enumerate_monomials(4, 2).size() == 10);
  CHECK(enumerate_monomials(2, 2) == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}});

  // Stars-and-bars oracle: count exponent vectors in [0, d]^vars summing to d.
  for (std::size_t vars = 1; vars <= 5; ++vars)
    for (unsigned d = 0; d <= 5; ++d) {
      std::uint64_t count = 0, total = 1;
      for (std::size_t i = 0; i < vars; ++i) total *= d + 1;
      for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t x = v, sum = 0;
        for (std::size_t i = 0; i < vars; ++i, x /= d + 1) sum += x % (d + 1);
        count += sum == d;
      }
      const auto monos = enumerate_monomials(vars, d);
      CHECK(monos.size() == count);
      CHECK(monos.size() == binomial(vars - 1 + d, d));
      CHECK(std::is_sorted(monos.begin(), monos.end(), GradedLex{}));
    }
}

TEST_CASE("lift_vars") {
  auto k = f2();
  const Form q(k, 2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  const Form lifted = lift_vars(q, 3);
  CHECK(lifted == Form(k, 3, 2, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 2, 0}, 1}}));
  CHECK(lifted.evaluate(pt(k, {1, 1, 0})) == q.evaluate(pt(k, {1, 1})));
  for (const ProjPoint& p : enumerate_space(k, 2)) {
    if (p.is_last_basis_point()) continue;
    CHECK(lifted.evaluate(p) == q.evaluate(project(p)));
  }
  CHECK_THROWS_AS(lift_vars(lifted, 2), UsageError);
}

TEST_CASE("pullback reproduces a two-step substitution in P^3") {
  auto k = f2();
  const Form z_form(k, 2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  const CoordChange second(k, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});                        // z_0 = y_0 + y_2
  const CoordChange first(k, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});  // y_2 = x_2 + x_3

  const Form y_form = pullback(lift_vars(z_form, 3), second);
  const Form ly = lin(k, {1, 0, 1}), y1 = lin(k, {0, 1, 0});
  CHECK(y_form == ly * ly + ly * y1 + y1 * y1);

  const Form x_form = pullback(lift_vars(y_form, 4), first);
  const Form lx = lin(k, {1, 0, 1, 1}), x1 = lin(k, {0, 1, 0, 0});
  CHECK(x_form == lx * lx + lx * x1 + x1 * x1);
  CHECK(to_string(x_form) == "x_0^2 + x_0*x_1 + x_1^2 + x_1*x_2 + x_1*x_3 + x_2^2 + x_3^2");
}

TEST_CASE("pullback identity, functoriality, and nonvanishing-set transport") {
  std::mt19937_64 rng(17);
  for (const FieldPtr& k : {f2(), f3(), f4()}) {
    for (int t = 0; t < 15; ++t) {
      const Form f = random_form(k, 3, 2, rng);
      const CoordChange a = random_invertible(k, 2, rng), b = random_invertible(k, 2, rng);
      CHECK(pullback(f, CoordChange::identity(k, 2)) == f);
      CHECK(pullback(pullback(f, a), b) == pullback(f, a * b));

      const Form g = pullback(f, a);
      const CoordChange a_inv = a.inverse();
      for (const ProjPoint& x : enumerate_space(k, 2)) {
        REQUIRE(g.evaluate(x) == f.evaluate(a.multiply(x.coords())));
        // x is in the nonvanishing set of g iff A x is in that of f.
        REQUIRE((g.evaluate(x) != 0) == (f.evaluate(a.apply(x)) != 0));
        REQUIRE((g.evaluate(a_inv.apply(x)) != 0) == (f.evaluate(x) != 0));
      }
    }
  }
  auto k = f2();
  CHECK_THROWS_AS(pullback(lin(k, {1, 1}), CoordChange::identity(k, 2)), UsageError);
}

TEST_CASE("restrict_coefficients") {
  auto k4 = f4();
  const Form prod = lin(k4, {1, 2}) * lin(k4, {1, 3});
  const Form down = restrict_coefficients(prod);
  CHECK(down.field()->same_as(*f2()));
  CHECK(down == Form(f2(), 2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
  CHECK_THROWS_AS(restrict_coefficients(Form(k4, 1, 2, {{{2}, 2}})), IntegrityError);
}

TEST_CASE("construction validation and rendering") {
  auto k = f3();
  CHECK_THROWS_AS(Form(k, 2, 2, {{{1, 0}, 1}}), UsageError);
  CHECK_THROWS_AS(Form(k, 2, 1, {{{1, 0, 0}, 1}}), UsageError);
  CHECK_THROWS_AS(Form(k, 2, 1, {{{1, 0}, 3}}), UsageError);
  const Form f(k, 2, 1, {{{1, 0}, 2}, {{0, 1}, 1}, {{1, 0}, 1}});  // 2x_0 + x_1 + x_0 = x_1
  CHECK(f == Form(k, 2, 1, {{{0, 1}, 1}}));
  CHECK(to_string(Form(k, 2, 2, {{{1, 1}, 2}, {{2, 0}, 1}})) == "x_0^2 + 2*x_0*x_1");
  CHECK(to_string(Form(k, 2, 2)) == "0");
}
