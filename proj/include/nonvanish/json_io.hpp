#pragma once

#include <json.hpp>

#include "nonvanish/bounds.hpp"
#include "nonvanish/construct.hpp"
#include "nonvanish/field.hpp"
#include "nonvanish/forms.hpp"
#include "nonvanish/oracle.hpp"
#include "nonvanish/projective.hpp"

// Interchange formats. Elements are always their canonical integer encodings.
// Readers validate and throw UsageError on malformed input; writers emit the
// canonical (sorted, graded-lex) form so equal values serialize identically.
namespace nonvanish::json_io {

using nlohmann::json;

// {"p": int, "moduli": [[c0, c1, ..., 1], ...]}
json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

// {"field": ..., "n": int, "points": [[int, ...], ...]}
json points_to_json(const PointSet& xs);
PointSet points_from_json(const json& j);

json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const FieldPtr& field, const json& j);

// {"field": ..., "vars": int, "degree": int, "terms": [{"exps": [...], "coeff": int}, ...]}
json form_to_json(const Form& f);
Form form_from_json(const json& j);

json matrix_to_json(const CoordChange& a);
CoordChange matrix_from_json(const FieldPtr& field, const json& j);

// {"q", "n", "size", "d1", "d2"}
json bounds_to_json(const BoundsReport& b);

json certificate_to_json(const NzCertificate& c);
json warning_to_json(const WarningReport& w);

// {"field", "n", "steps": [{"kind": "missing_point" | "coordinate_change" |
// "projection" | "lang_base_case", ...}], "form", "degree"}
json trace_to_json(const ConstructionTrace& t);
json steps_to_json(const std::vector<TraceStep>& steps);
std::vector<TraceStep> steps_from_json(const FieldPtr& field, const json& j);

// Parses text, mapping parse failures to UsageError.
json parse(const std::string& text);

}  // namespace nonvanish::json_io
