#pragma once

#include <variant>
#include <vector>

#include "nonvanish/forms.hpp"
#include "nonvanish/projective.hpp"

namespace nonvanish {

// Norm form of x_0 e_0 + ... + x_n e_n over F_{q^{n+1}} = F_q[z]/(g), where g
// is find_irreducible(F_q, n+1) and e_i = z^i. Degree n+1, no zeros on P^n(F_q).
Form lang_form(const FieldPtr& field, unsigned n);

// The same norm form over an explicitly chosen extension of `field`.
Form lang_form(const FieldPtr& field, const FieldPtr& extension);

// One step of the recursive construction, in the order they happen while
// descending: a missing point, the change sending it to (0:...:0:1), the
// projection to one dimension lower; and finally the norm-form base case.
struct MissingPointStep {
  ProjPoint point;
};
struct ChangeStep {
  CoordChange change;
};
struct ProjectionStep {
  unsigned from_dimension;
  std::size_t image_size;
};
struct LangBaseStep {
  unsigned level;
};
using TraceStep = std::variant<MissingPointStep, ChangeStep, ProjectionStep, LangBaseStep>;

struct ConstructionTrace {
  FieldPtr field;
  unsigned n = 0;
  std::vector<TraceStep> steps;
  Form form;
  unsigned degree = 0;
};

struct Construction {
  Form form;
  ConstructionTrace trace;
};

// Recursive projection algorithm: while X is a proper subset, move the
// smallest missing point to (0:...:0:1) and project; at a full space, use the
// norm form; then lift and pull back level by level. Each level's form is
// checked nonvanishing before it is returned, and the result has degree at
// most upper_bound_d2(|X|, q, n).
Construction construct_nonvanishing(const PointSet& xs);

// Re-runs the steps of a trace against xs, validating every step (the point is
// missing, the change sends it to (0:...:0:1), projection sizes agree, the base
// case is a full space), and rebuilds the form. Steps may come from
// construct_nonvanishing or be chosen by hand.
Form replay_trace(const PointSet& xs, const std::vector<TraceStep>& steps);

// P^n(F_q) minus tau(P^{n-d}(F_q)), of size q^{n-d+1} + ... + q^n.
PointSet extremal_set(const FieldPtr& field, unsigned n, unsigned d);

}  // namespace nonvanish
