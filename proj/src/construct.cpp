#include "nonvanish/construct.hpp"

#include <string>

#include "nonvanish/bounds.hpp"

namespace nonvanish {

Form lang_form(const FieldPtr& field, unsigned n) {
  return lang_form(field, Field::extension(field, find_irreducible(*field, n + 1)));
}

Form lang_form(const FieldPtr& field, const FieldPtr& extension) {
  if (!extension->base() || !extension->base()->same_as(*field))
    throw UsageError(extension->describe() + " is not an extension of " + field->describe());
  const unsigned vars = extension->degree();
  // Power basis e_i = z^i; z^i encodes as q^i.
  std::vector<Elem> basis(vars);
  Elem code = 1;
  for (unsigned i = 0; i < vars; ++i, code *= field->order()) basis[i] = code;

  Form product = Form::constant(extension, vars, 1);
  std::vector<Elem> coeffs(vars);
  for (unsigned j = 0; j < vars; ++j) {
    for (unsigned i = 0; i < vars; ++i) coeffs[i] = extension->frobenius(basis[i], j);
    product = product * Form::linear(extension, coeffs);
  }
  return restrict_coefficients(product);
}

namespace {

void verify_on(const Form& f, const PointSet& xs, const char* stage) {
  for (const ProjPoint& p : xs)
    if (f.evaluate(p) == 0)
      throw IntegrityError(std::string("constructed form ") + to_string(f) + " vanishes on a point during " + stage);
}

// Lifts g back through the recorded changes, checking each level.
Form climb(Form g, const std::vector<CoordChange>& changes, const std::vector<PointSet>& sets) {
  verify_on(g, sets.back(), "the base case");
  for (std::size_t i = changes.size(); i-- > 0;) {
    g = pullback(lift_vars(g, sets[i].dimension() + 1), changes[i]);
    verify_on(g, sets[i], "pullback");
  }
  return g;
}

}  // namespace

Construction construct_nonvanishing(const PointSet& xs) {
  if (xs.empty()) throw UsageError("cannot construct a nonvanishing form for an empty point set");
  const FieldPtr& field = xs.field();

  std::vector<TraceStep> steps;
  std::vector<CoordChange> changes;
  std::vector<PointSet> sets{xs};
  while (!sets.back().is_full_space()) {
    const PointSet& cur = sets.back();
    const ProjPoint p = *find_missing(cur);
    CoordChange a = change_to_last(p);
    PointSet image = project(a.apply(cur));
    steps.emplace_back(MissingPointStep{p});
    steps.emplace_back(ChangeStep{a});
    steps.emplace_back(ProjectionStep{cur.dimension(), image.size()});
    changes.push_back(std::move(a));
    sets.push_back(std::move(image));
  }
  const unsigned level = sets.back().dimension();
  steps.emplace_back(LangBaseStep{level});

  Form form = climb(lang_form(field, level), changes, sets);
  const unsigned bound = upper_bound_d2(xs.size(), field->order(), xs.dimension());
  if (form.degree() > bound)
    throw IntegrityError("constructed degree " + std::to_string(form.degree()) + " exceeds bound " +
                         std::to_string(bound));
  ConstructionTrace trace{field, xs.dimension(), std::move(steps), form, form.degree()};
  return {std::move(form), std::move(trace)};
}

Form replay_trace(const PointSet& xs, const std::vector<TraceStep>& steps) {
  if (xs.empty()) throw UsageError("cannot replay a trace on an empty point set");
  std::vector<CoordChange> changes;
  std::vector<PointSet> sets{xs};

  std::size_t i = 0;
  auto next = [&]() -> const TraceStep& {
    if (i >= steps.size()) throw UsageError("trace ends before the base case");
    return steps[i++];
  };

  while (true) {
    const PointSet& cur = sets.back();
    const TraceStep& step = next();
    if (const auto* base = std::get_if<LangBaseStep>(&step)) {
      if (base->level != cur.dimension())
        throw UsageError("base case at level " + std::to_string(base->level) + " but current dimension is " +
                         std::to_string(cur.dimension()));
      if (!cur.is_full_space()) throw UsageError("base case reached on a proper subset");
      if (i != steps.size()) throw UsageError("steps after the base case");
      break;
    }
    const auto* missing = std::get_if<MissingPointStep>(&step);
    if (!missing) throw UsageError("expected a missing-point step");
    if (missing->point.dimension() != cur.dimension() || !missing->point.field()->same_as(*cur.field()))
      throw UsageError("missing point does not live in the current space");
    if (cur.contains(missing->point)) throw UsageError("trace point is not missing from the set");

    const auto* change = std::get_if<ChangeStep>(&next());
    if (!change) throw UsageError("expected a coordinate-change step");
    if (!change->change.apply(missing->point).is_last_basis_point())
      throw UsageError("coordinate change does not send the missing point to (0:...:0:1)");

    const auto* proj = std::get_if<ProjectionStep>(&next());
    if (!proj) throw UsageError("expected a projection step");
    if (proj->from_dimension != cur.dimension()) throw UsageError("projection step from the wrong dimension");
    PointSet image = project(change->change.apply(cur));
    if (proj->image_size != image.size())
      throw UsageError("projection image has " + std::to_string(image.size()) + " points, trace records " +
                       std::to_string(proj->image_size));
    changes.push_back(change->change);
    sets.push_back(std::move(image));
  }
  return climb(lang_form(xs.field(), sets.back().dimension()), changes, sets);
}

PointSet extremal_set(const FieldPtr& field, unsigned n, unsigned d) {
  if (d < 1 || d > n)
    throw UsageError("extremal set needs 1 <= d <= n, got d = " + std::to_string(d) + ", n = " + std::to_string(n));
  std::vector<ProjPoint> removed;
  for (const ProjPoint& p : enumerate_space(field, n - d)) removed.push_back(embed_tau(p, d));
  return complement(PointSet(field, n, std::move(removed)));
}

}  // namespace nonvanish
