#include "nonvanish/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nonvanish::cli {

using nlohmann::json;

std::string point_text(const ProjPoint& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.coords().size(); ++i) os << (i ? ":" : "") << p[i];
  os << ')';
  return os.str();
}

namespace {

std::string matrix_text(const CoordChange& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < a.size(); ++r) {
    os << (r ? " [" : "[");
    for (std::size_t c = 0; c < a.size(); ++c) os << (c ? " " : "") << a.at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string steps_text(const std::vector<TraceStep>& steps) {
  std::ostringstream os;
  for (const TraceStep& s : steps) {
    if (const auto* m = std::get_if<MissingPointStep>(&s)) {
      os << "P^" << m->point.dimension() << ": pick missing point " << point_text(m->point) << '\n';
    } else if (const auto* c = std::get_if<ChangeStep>(&s)) {
      os << "  change coordinates y = A x, A = " << matrix_text(c->change) << '\n';
    } else if (const auto* p = std::get_if<ProjectionStep>(&s)) {
      os << "  project to P^" << p->from_dimension - 1 << ": " << p->image_size << " points\n";
    } else {
      const unsigned level = std::get<LangBaseStep>(s).level;
      os << "P^" << level << ": full space, norm form of degree " << level + 1 << '\n';
    }
  }
  return os.str();
}

std::string form_line(const Form& f) { return to_string(f) + "  (degree " + std::to_string(f.degree()) + ")"; }

}  // namespace

CommandResult cmd_bounds(const PointSet& xs) {
  const BoundsReport b = compute_bounds(xs);
  std::ostringstream os;
  os << "q = " << b.q << ", n = " << b.n << ", |X| = " << b.size << '\n'
     << "d1 = " << b.d1 << '\n'
     << "d2 = " << b.d2 << '\n';
  return {"bounds", json_io::bounds_to_json(b), os.str()};
}

CommandResult cmd_construct(const PointSet& xs, bool with_trace, bool verify) {
  Construction c = construct_nonvanishing(xs);
  json payload = {{"form", json_io::form_to_json(c.form)}, {"degree", c.form.degree()}};
  std::ostringstream os;
  if (with_trace) {
    payload["trace"] = json_io::trace_to_json(c.trace);
    os << steps_text(c.trace.steps);
  }
  os << "form: " << form_line(c.form) << '\n';
  if (verify) {
    const bool ok = is_nonvanishing(c.form, xs);
    if (!ok) throw IntegrityError("constructed form vanishes on the input set");
    payload["verified"] = true;
    os << "verify: pass\n";
  }
  return {"construct", payload, os.str()};
}

CommandResult cmd_replay(const PointSet& xs, const std::vector<TraceStep>& steps) {
  const Form f = replay_trace(xs, steps);
  std::ostringstream os;
  os << steps_text(steps) << "form: " << form_line(f) << '\n';
  return {"replay", {{"form", json_io::form_to_json(f)}, {"degree", f.degree()}}, os.str()};
}

CommandResult cmd_exact(const PointSet& xs, std::optional<unsigned> max_degree, const ScanOptions& options) {
  const NzCertificate cert = exact_nz(xs, options, max_degree);
  std::ostringstream os;
  os << "Nz = " << cert.nz << '\n';
  for (const RefutedDegree& r : cert.refuted)
    os << "degree " << r.degree << ": all " << r.candidates << " candidate forms vanish on X\n";
  os << "witness: " << form_line(cert.witness) << '\n';
  return {"exact", json_io::certificate_to_json(cert), os.str()};
}

CommandResult cmd_lang(const FieldPtr& field, unsigned n) {
  const Form f = lang_form(field, n);
  return {"lang", json_io::form_to_json(f), "form: " + form_line(f) + "\n"};
}

CommandResult cmd_extremal(const FieldPtr& field, unsigned n, unsigned d) {
  const PointSet xs = extremal_set(field, n, d);
  std::ostringstream os;
  os << xs.size() << " points\n";
  for (const ProjPoint& p : xs) os << point_text(p) << '\n';
  return {"extremal", json_io::points_to_json(xs), os.str()};
}

CommandResult cmd_verify_warning(const FieldPtr& field, unsigned n, unsigned d, const ScanOptions& options) {
  const WarningReport w = verify_warning(field, n, d, options);
  std::ostringstream os;
  os << "q = " << w.q << ", n = " << w.n << ", d = " << w.d << '\n'
     << "forms scanned: " << w.forms_scanned << '\n'
     << "minimum zeros: " << w.min_zeros << '\n'
     << "bound: " << w.bound << '\n'
     << (w.pass ? "pass" : "FAIL") << '\n';
  return {"verify-warning", json_io::warning_to_json(w), os.str(), w.pass ? kOk : kIntegrity};
}

CommandResult cmd_enumerate(const FieldPtr& field, unsigned n) {
  const PointSet xs = enumerate_space(field, n);
  std::ostringstream os;
  os << xs.size() << " points\n";
  for (const ProjPoint& p : xs) os << point_text(p) << '\n';
  return {"enumerate", json_io::points_to_json(xs), os.str()};
}

CommandResult cmd_check(const PointSet& xs, const Form& f) {
  const bool ok = is_nonvanishing(f, xs);
  json zeros = json::array();
  std::ostringstream os;
  for (const ProjPoint& p : xs)
    if (f.evaluate(p) == 0) {
      zeros.push_back(json_io::point_to_json(p));
      os << "vanishes at " << point_text(p) << '\n';
    }
  os << (ok ? "nonvanishing" : "not nonvanishing") << '\n';
  return {"check", {{"nonvanishing", ok}, {"zeros", zeros}}, os.str()};
}

// ---------------------------------------------------------------------------

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return json_io::parse(buf.str());
}

std::vector<Elem> parse_coeff_list(const std::string& s) {
  std::vector<Elem> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad modulus coefficient \"" + tok + "\"");
    }
  }
  return out;
}

struct FieldArgs {
  std::uint64_t p = 2;
  std::vector<std::string> moduli;

  FieldPtr build() const {
    std::vector<Poly> polys;
    for (const std::string& m : moduli) polys.push_back(parse_coeff_list(m));
    return Field::from_moduli(p, polys);
  }
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "Characteristic")->required();
  cmd->add_option("--modulus", args.moduli,
                  "Monic irreducible modulus as comma-separated little-endian coefficients; repeat for a tower")
      ->take_all();
}

std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("NONVANISH_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("NONVANISH_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultBudget;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonvanishing forms on point sets of projective space over finite fields"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON payload instead of text");

  std::string input, form_file, trace_file;
  FieldArgs field_args;
  unsigned n = 0, d = 0, threads = 1;
  std::optional<unsigned> max_degree;
  std::optional<std::uint64_t> budget;
  bool with_trace = false, verify = false;

  auto add_scan_options = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Candidate forms allowed per degree (env NONVANISH_BUDGET)");
    cmd->add_option("--threads", threads, "Worker threads for the exhaustive scan")->check(CLI::PositiveNumber);
  };

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds d1, d2 for a point set");
  bounds->add_option("--input", input, "Point set JSON")->required();

  auto* construct = app.add_subcommand("construct", "Build a nonvanishing form by recursive projection");
  construct->add_option("--input", input, "Point set JSON")->required();
  construct->add_flag("--trace", with_trace, "Include the construction trace");
  construct->add_flag("--verify", verify, "Re-check the form on every input point");

  auto* replay = app.add_subcommand("replay", "Rebuild a form from explicit construction steps");
  replay->add_option("--input", input, "Point set JSON")->required();
  replay->add_option("--trace", trace_file, "Trace JSON (an object with \"steps\", or a step array)")->required();

  auto* exact = app.add_subcommand("exact", "Exact Nz(X) by exhaustive search");
  exact->add_option("--input", input, "Point set JSON")->required();
  exact->add_option("--max-degree", max_degree, "Highest degree to scan (default n+1)");
  add_scan_options(exact);

  auto* lang = app.add_subcommand("lang", "Norm form of degree n+1 without zeros on P^n");
  add_field_options(lang, field_args);
  lang->add_option("--n", n, "Projective dimension")->required();

  auto* extremal = app.add_subcommand("extremal", "P^n minus an embedded P^{n-d}");
  add_field_options(extremal, field_args);
  extremal->add_option("--n", n, "Projective dimension")->required();
  extremal->add_option("--d", d, "Target degree, 1 <= d <= n")->required();

  auto* warning = app.add_subcommand("verify-warning", "Check the projective Warning bound for all forms of degree d");
  add_field_options(warning, field_args);
  warning->add_option("--n", n, "Projective dimension")->required();
  warning->add_option("--d", d, "Form degree, 1 <= d <= n")->required();
  add_scan_options(warning);

  auto* enumerate = app.add_subcommand("enumerate", "All points of P^n");
  add_field_options(enumerate, field_args);
  enumerate->add_option("--n", n, "Projective dimension")->required();

  auto* check = app.add_subcommand("check", "Is a form nonvanishing on a point set?");
  check->add_option("--input", input, "Point set JSON")->required();
  check->add_option("--form", form_file, "Form JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    ScanOptions scan;
    scan.budget = budget ? *budget : budget_from_env();
    scan.threads = threads;

    CommandResult result;
    if (*bounds) {
      result = cmd_bounds(json_io::points_from_json(read_json_file(input)));
    } else if (*construct) {
      result = cmd_construct(json_io::points_from_json(read_json_file(input)), with_trace, verify);
    } else if (*replay) {
      const PointSet xs = json_io::points_from_json(read_json_file(input));
      const json t = read_json_file(trace_file);
      result = cmd_replay(xs, json_io::steps_from_json(xs.field(), t.is_object() ? t.at("steps") : t));
    } else if (*exact) {
      result = cmd_exact(json_io::points_from_json(read_json_file(input)), max_degree, scan);
    } else if (*lang) {
      result = cmd_lang(field_args.build(), n);
    } else if (*extremal) {
      result = cmd_extremal(field_args.build(), n, d);
    } else if (*warning) {
      result = cmd_verify_warning(field_args.build(), n, d, scan);
    } else if (*enumerate) {
      result = cmd_enumerate(field_args.build(), n);
    } else {
      const PointSet xs = json_io::points_from_json(read_json_file(input));
      result = cmd_check(xs, json_io::form_from_json(read_json_file(form_file)));
    }

    if (as_json)
      out << result.payload.dump(2) << '\n';
    else
      out << result.text;
    return result.exit_code;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nonvanish::cli
