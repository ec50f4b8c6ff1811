#include "nonvanish/json_io.hpp"

#include <string>

namespace nonvanish::json_io {

namespace {

// Wraps nlohmann's type errors so malformed documents surface as UsageError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& member(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw UsageError(std::string("malformed ") + what + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<Elem> elems_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string("malformed ") + what + ": expected an array");
  std::vector<Elem> out;
  for (const json& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw UsageError(std::string("malformed ") + what + ": expected non-negative integers");
    out.push_back(v.get<Elem>());
  }
  return out;
}

}  // namespace

json field_to_json(const Field& f) {
  json moduli = json::array();
  for (const Poly& m : f.moduli()) moduli.push_back(m);
  return {{"p", f.characteristic()}, {"moduli", moduli}};
}

FieldPtr field_from_json(const json& j) {
  return guarded("field", [&] {
    const std::uint64_t p = member(j, "p", "field").get<std::uint64_t>();
    std::vector<Poly> moduli;
    if (j.contains("moduli"))
      for (const json& m : j.at("moduli")) moduli.push_back(elems_from_json(m, "modulus"));
    return Field::from_moduli(p, moduli);
  });
}

json point_to_json(const ProjPoint& p) { return json(std::vector<Elem>(p.coords().begin(), p.coords().end())); }

ProjPoint point_from_json(const FieldPtr& field, const json& j) {
  return ProjPoint::canonicalize(field, elems_from_json(j, "point"));
}

json points_to_json(const PointSet& xs) {
  json pts = json::array();
  for (const ProjPoint& p : xs) pts.push_back(point_to_json(p));
  return {{"field", field_to_json(*xs.field())}, {"n", xs.dimension()}, {"points", pts}};
}

PointSet points_from_json(const json& j) {
  return guarded("point set", [&] {
    FieldPtr field = field_from_json(member(j, "field", "point set"));
    const unsigned n = member(j, "n", "point set").get<unsigned>();
    std::vector<ProjPoint> pts;
    for (const json& p : member(j, "points", "point set")) {
      ProjPoint pt = point_from_json(field, p);
      if (pt.dimension() != n)
        throw UsageError("point with " + std::to_string(pt.coords().size()) + " coordinates in P^" +
                         std::to_string(n));
      pts.push_back(std::move(pt));
    }
    return PointSet(field, n, std::move(pts));
  });
}

json form_to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exps", e}, {"coeff", c}});
  return {{"field", field_to_json(*f.field())}, {"vars", f.vars()}, {"degree", f.degree()}, {"terms", terms}};
}

Form form_from_json(const json& j) {
  return guarded("form", [&] {
    FieldPtr field = field_from_json(member(j, "field", "form"));
    const std::size_t vars = member(j, "vars", "form").get<std::size_t>();
    const unsigned degree = member(j, "degree", "form").get<unsigned>();
    std::vector<std::pair<Exponents, Elem>> terms;
    for (const json& t : member(j, "terms", "form")) {
      const std::vector<Elem> exps = elems_from_json(member(t, "exps", "term"), "exponents");
      const json& c = member(t, "coeff", "term");
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) throw UsageError("malformed term coefficient");
      terms.emplace_back(Exponents(exps.begin(), exps.end()), c.get<Elem>());
    }
    return Form(field, vars, degree, terms);
  });
}

json matrix_to_json(const CoordChange& a) { return a.rows(); }

CoordChange matrix_from_json(const FieldPtr& field, const json& j) {
  return guarded("matrix", [&] {
    std::vector<std::vector<Elem>> rows;
    if (!j.is_array()) throw UsageError("malformed matrix: expected an array of rows");
    for (const json& r : j) rows.push_back(elems_from_json(r, "matrix row"));
    return CoordChange(field, std::move(rows));
  });
}

json bounds_to_json(const BoundsReport& b) {
  return {{"q", b.q}, {"n", b.n}, {"size", b.size}, {"d1", b.d1}, {"d2", b.d2}};
}

json certificate_to_json(const NzCertificate& c) {
  json refuted = json::array();
  for (const RefutedDegree& r : c.refuted) refuted.push_back({{"degree", r.degree}, {"candidates", r.candidates}});
  return {{"q", c.q},
          {"n", c.n},
          {"size", c.size},
          {"nz", c.nz},
          {"witness", form_to_json(c.witness)},
          {"witness_index", c.witness_index},
          {"refuted", refuted}};
}

json warning_to_json(const WarningReport& w) {
  return {{"q", w.q},
          {"n", w.n},
          {"d", w.d},
          {"forms_scanned", w.forms_scanned},
          {"min_zeros", w.min_zeros},
          {"bound", w.bound},
          {"pass", w.pass}};
}

json steps_to_json(const std::vector<TraceStep>& steps) {
  json out = json::array();
  for (const TraceStep& s : steps) {
    if (const auto* m = std::get_if<MissingPointStep>(&s)) {
      out.push_back({{"kind", "missing_point"}, {"point", point_to_json(m->point)}});
    } else if (const auto* c = std::get_if<ChangeStep>(&s)) {
      out.push_back({{"kind", "coordinate_change"}, {"matrix", matrix_to_json(c->change)}});
    } else if (const auto* p = std::get_if<ProjectionStep>(&s)) {
      out.push_back({{"kind", "projection"}, {"from", p->from_dimension}, {"image_size", p->image_size}});
    } else {
      out.push_back({{"kind", "lang_base_case"}, {"level", std::get<LangBaseStep>(s).level}});
    }
  }
  return out;
}

std::vector<TraceStep> steps_from_json(const FieldPtr& field, const json& j) {
  return guarded("trace", [&] {
    std::vector<TraceStep> steps;
    if (!j.is_array()) throw UsageError("malformed trace: expected a step array");
    for (const json& s : j) {
      const std::string kind = member(s, "kind", "trace step").get<std::string>();
      if (kind == "missing_point") {
        steps.emplace_back(MissingPointStep{point_from_json(field, member(s, "point", "trace step"))});
      } else if (kind == "coordinate_change") {
        steps.emplace_back(ChangeStep{matrix_from_json(field, member(s, "matrix", "trace step"))});
      } else if (kind == "projection") {
        steps.emplace_back(ProjectionStep{member(s, "from", "trace step").get<unsigned>(),
                                          member(s, "image_size", "trace step").get<std::size_t>()});
      } else if (kind == "lang_base_case") {
        steps.emplace_back(LangBaseStep{member(s, "level", "trace step").get<unsigned>()});
      } else {
        throw UsageError("unknown trace step kind \"" + kind + "\"");
      }
    }
    return steps;
  });
}

json trace_to_json(const ConstructionTrace& t) {
  return {{"field", field_to_json(*t.field)},
          {"n", t.n},
          {"steps", steps_to_json(t.steps)},
          {"form", form_to_json(t.form)},
          {"degree", t.degree}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace nonvanish::json_io
