#include <doctest.h>

#include <random>

#include "nonvanish/json_io.hpp"

using namespace nonvanish;
using namespace nonvanish::json_io;

namespace {

FieldPtr f2() { return Field::prime(2); }
FieldPtr f4() { return Field::extension(f2(), {1, 1, 1}); }
FieldPtr f16_tower() { return Field::extension(f4(), {2, 1, 1}); }

ProjPoint pt(const FieldPtr& k, std::vector<Elem> c) { return ProjPoint::canonicalize(k, std::move(c)); }

Form random_form(const FieldPtr& k, std::size_t vars, unsigned degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, k->order() - 1);
  std::vector<std::pair<Exponents, Elem>> terms;
  for (const Exponents& e : enumerate_monomials(vars, degree)) terms.emplace_back(e, pick(rng));
  return Form(k, vars, degree, terms);
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(field_to_json(*f2()) == json::parse(R"({"p": 2, "moduli": []})"));
  CHECK(field_to_json(*f4()) == json::parse(R"({"p": 2, "moduli": [[1, 1, 1]]})"));
  for (const FieldPtr& k : {f2(), Field::prime(7), f4(), f16_tower()})
    CHECK(field_from_json(field_to_json(*k))->same_as(*k));
  CHECK(field_from_json(json::parse(R"({"p": 3})"))->order() == 3);

  CHECK_THROWS_AS(field_from_json(json::parse(R"({"moduli": []})")), UsageError);
  CHECK_THROWS_AS(field_from_json(json::parse(R"({"p": 4, "moduli": []})")), UsageError);
  CHECK_THROWS_AS(field_from_json(json::parse(R"({"p": 2, "moduli": [[1, 0, 1]]})")), UsageError);
  CHECK_THROWS_AS(field_from_json(json::parse(R"({"p": "two"})")), UsageError);
  CHECK_THROWS_AS(field_from_json(json::parse(R"({"p": 2, "moduli": [[1, -1, 1]]})")), UsageError);
}

TEST_CASE("point set reader canonicalizes and dedupes, writer is sorted") {
  const json in = json::parse(R"({"field": {"p": 3, "moduli": []}, "n": 1,
                                  "points": [[2, 1], [1, 2], [0, 2], [1, 0]]})");
  const PointSet xs = points_from_json(in);
  CHECK(xs.size() == 3);
  CHECK(points_to_json(xs) == json::parse(R"({"field": {"p": 3, "moduli": []}, "n": 1,
                                              "points": [[0, 1], [1, 0], [1, 2]]})"));

  CHECK_THROWS_AS(points_from_json(json::parse(R"({"field": {"p": 2}, "n": 2, "points": [[1, 0]]})")), UsageError);
  CHECK_THROWS_AS(points_from_json(json::parse(R"({"field": {"p": 2}, "n": 1, "points": [[0, 0]]})")), UsageError);
  CHECK_THROWS_AS(points_from_json(json::parse(R"({"field": {"p": 2}, "n": 1, "points": [[2, 1]]})")), UsageError);
  CHECK_THROWS_AS(points_from_json(json::parse(R"({"field": {"p": 2}, "points": []})")), UsageError);
  CHECK_THROWS_AS(points_from_json(json::parse(R"({"field": {"p": 2}, "n": 1, "points": 5})")), UsageError);
  CHECK_THROWS_AS(points_from_json(json::parse(R"([1, 2])")), UsageError);
}

TEST_CASE("point sets round-trip") {
  std::mt19937_64 rng(101);
  for (const FieldPtr& k : {f2(), Field::prime(3), f4()})
    for (unsigned n = 0; n <= 2; ++n) {
      const PointSet space = enumerate_space(k, n);
      for (int t = 0; t < 10; ++t) {
        std::vector<ProjPoint> pick;
        for (const ProjPoint& p : space)
          if (rng() & 1) pick.push_back(p);
        const PointSet xs(k, n, pick);
        const json j = points_to_json(xs);
        REQUIRE(points_from_json(j) == xs);
        REQUIRE(points_to_json(points_from_json(j)).dump() == j.dump());
      }
    }
}

TEST_CASE("form schema") {
  auto k = f2();
  const Form q(k, 2, 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(form_to_json(q) == json::parse(R"({"field": {"p": 2, "moduli": []}, "vars": 2, "degree": 2,
      "terms": [{"exps": [2, 0], "coeff": 1}, {"exps": [1, 1], "coeff": 1}, {"exps": [0, 2], "coeff": 1}]})"));

  // Terms given out of order and with a zero coefficient are normalized.
  const Form g = form_from_json(json::parse(R"({"field": {"p": 2}, "vars": 2, "degree": 2,
      "terms": [{"exps": [0, 2], "coeff": 1}, {"exps": [1, 1], "coeff": 0}, {"exps": [2, 0], "coeff": 1}]})"));
  CHECK(g == Form(k, 2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));

  CHECK_THROWS_AS(form_from_json(json::parse(R"({"field": {"p": 2}, "vars": 2, "degree": 2,
      "terms": [{"exps": [1, 0], "coeff": 1}]})")), UsageError);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"field": {"p": 2}, "vars": 2, "degree": 1,
      "terms": [{"exps": [1, 0], "coeff": 2}]})")), UsageError);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"field": {"p": 2}, "vars": 2, "degree": 1,
      "terms": [{"exps": [1, 0]}]})")), UsageError);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"field": {"p": 2}, "vars": 2, "terms": []})")), UsageError);
}

TEST_CASE("forms round-trip") {
  std::mt19937_64 rng(202);
  for (const FieldPtr& k : {f2(), Field::prime(5), f4(), f16_tower()})
    for (unsigned d = 1; d <= 3; ++d)
      for (int t = 0; t < 5; ++t) {
        const Form f = random_form(k, 3, d, rng);
        const json j = form_to_json(f);
        const Form back = form_from_json(j);
        REQUIRE(back == f);
        REQUIRE(form_to_json(back).dump() == j.dump());
      }
  const Form zero(f2(), 3, 2);
  CHECK(form_from_json(form_to_json(zero)) == zero);
}

TEST_CASE("trace steps round-trip") {
  auto k = f2();
  const std::vector<TraceStep> steps = {
      MissingPointStep{pt(k, {0, 0, 1, 1})},
      ChangeStep{CoordChange(k, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}})},
      ProjectionStep{3, 5},
      LangBaseStep{1}};
  const json j = steps_to_json(steps);
  CHECK(j[0] == json::parse(R"({"kind": "missing_point", "point": [0, 0, 1, 1]})"));
  CHECK(j[2] == json::parse(R"({"kind": "projection", "from": 3, "image_size": 5})"));
  CHECK(j[3] == json::parse(R"({"kind": "lang_base_case", "level": 1})"));
  CHECK(steps_to_json(steps_from_json(k, j)).dump() == j.dump());

  CHECK_THROWS_AS(steps_from_json(k, json::parse(R"([{"kind": "teleport"}])")), UsageError);
  CHECK_THROWS_AS(steps_from_json(k, json::parse(R"([{"kind": "projection", "from": 3}])")), UsageError);
  CHECK_THROWS_AS(steps_from_json(k, json::parse(R"([{"kind": "coordinate_change", "matrix": [[1, 1], [1, 1]]}])")),
                  UsageError);
  CHECK_THROWS_AS(steps_from_json(k, json::parse(R"({"kind": "lang_base_case"})")), UsageError);

  const Construction c = construct_nonvanishing(enumerate_space(k, 2));
  const json t = trace_to_json(c.trace);
  CHECK(t.at("degree") == 3);
  CHECK(form_from_json(t.at("form")) == c.form);
  CHECK(steps_to_json(steps_from_json(k, t.at("steps"))).dump() == t.at("steps").dump());
}

TEST_CASE("reports") {
  CHECK(bounds_to_json(BoundsReport{2, 3, 6, 1, 2}) ==
        json::parse(R"({"q": 2, "n": 3, "size": 6, "d1": 1, "d2": 2})"));
  const NzCertificate cert = exact_nz(enumerate_space(f2(), 1));
  const json j = certificate_to_json(cert);
  CHECK(j.at("nz") == 2);
  CHECK(form_from_json(j.at("witness")) == cert.witness);
  CHECK(j.at("refuted") == json::parse(R"([{"degree": 1, "candidates": 3}])"));
  const json w = warning_to_json(verify_warning(f2(), 2, 1));
  CHECK(w.at("min_zeros") == 3);
  CHECK(w.at("pass") == true);
}

TEST_CASE("parse maps syntax errors to UsageError") {
  CHECK(parse("[1, 2]") == json::array({1, 2}));
  CHECK_THROWS_AS(parse("{\"p\": "), UsageError);
  CHECK_THROWS_AS(parse(""), UsageError);
}
