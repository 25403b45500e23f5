#include "mixlink/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixlink/covering.hpp"
#include "mixlink/detail/json_report.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/identities.hpp"
#include "mixlink/link_certifier.hpp"
#include "mixlink/newton_boundary.hpp"
#include "mixlink/parser.hpp"
#include "mixlink/report.hpp"

namespace mixlink {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string file;
  std::string expr;
  std::size_t n = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.file, "Polynomial file ('-' for stdin)");
  cmd->add_option("-e,--expr", in.expr, "Polynomial given inline");
  cmd->add_option("-n,--dimension", in.n, "Number of variables (default: largest index)");
}

std::string read_text(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read '" + path + "'");
  os << is.rdbuf();
  return os.str();
}

// Drops '#' comment lines.
std::string strip_comments(const std::string& text) {
  std::istringstream is(text);
  std::string line, out;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

MixedPolynomial load_polynomial(const std::string& file, const std::string& expr, std::size_t n) {
  if (file.empty() == expr.empty()) throw UsageError("give exactly one of a polynomial file or --expr");
  const std::string text = expr.empty() ? strip_comments(read_text(file)) : expr;
  if (n != 0 && infer_dimension(text) > n) {
    throw UsageError("polynomial uses " + std::to_string(infer_dimension(text)) + " variables but --dimension is " +
                     std::to_string(n));
  }
  return parse_polynomial(text, n);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty entry in list '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<int> int_list(const std::string& s, std::size_t n) {
  std::vector<int> v;
  for (const auto& item : split(s)) v.push_back(static_cast<int>(to_long(item)));
  if (v.size() == 1 && n > 1) v.assign(n, v[0]);
  if (v.size() != n) throw UsageError("list '" + s + "' must have 1 or " + std::to_string(n) + " entries");
  return v;
}

std::optional<CoveringSpec> covering_from(const std::string& a, const std::string& b, std::size_t n) {
  if (a.empty() && b.empty()) return std::nullopt;
  if (a.empty() || b.empty()) throw UsageError("--a and --b must be given together");
  return CoveringSpec(int_list(a, n), int_list(b, n));
}

std::string weights_str(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + std::to_string(w[j]);
  return s + ")";
}

std::string rational_str(const std::vector<mpq_class>& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + w[j].get_str();
  return s + ")";
}

Json weighted_json(const std::optional<WeightedDegree>& w) {
  if (!w) return nullptr;
  return {{"weights", w->weights}, {"degree", w->degree}, {"unique", w->unique}};
}

std::string weighted_text(const char* name, const char* deg, const std::optional<WeightedDegree>& w) {
  if (!w) return std::string(name) + ": none";
  std::string s = std::string(name) + ": " + weights_str(w->weights) + " " + deg + "=" + std::to_string(w->degree);
  if (!w->unique) s += " (not unique)";
  return s;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  InputOptions in;
  bool json = false;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

int run_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const MixedPolynomial p = load_polynomial(o.in.file, o.in.expr, o.in.n);
  if (p.is_zero()) throw DegenerateInputError("degenerate input: the zero polynomial");
  const HomogeneityReport h = detect_weights(p);
  const ConvenienceReport conv = is_convenient(p);
  Json j;
  j["check"] = "analyze";
  j["polynomial"] = p.to_string();
  j["dimension"] = p.dimension();
  j["radial"] = weighted_json(h.radial);
  j["polar"] = weighted_json(h.polar);
  j["strongly_polar"] = h.strongly_polar;
  j["strongly_polar_positive"] = h.strongly_polar_positive;
  j["polar_degree_zero"] = h.polar_degree_zero;
  j["convenient"] = conv.convenient;
  std::vector<std::size_t> missing;
  for (auto a : conv.missing_axes) missing.push_back(a + 1);
  j["missing_axes"] = missing;

  std::ostringstream text;
  text << "polynomial: " << p.to_string() << "\n";
  text << "dimension: " << p.dimension() << "\n";
  text << weighted_text("radial weight", "m_r", h.radial) << "\n";
  text << weighted_text("polar weight", "m_p", h.polar) << "\n";
  text << "strongly polar: " << (h.strongly_polar ? "yes" : "no")
       << ", strongly polar positive: " << (h.strongly_polar_positive ? "yes" : "no") << "\n";
  if (h.polar_degree_zero) text << "note: polar degree 0\n";

  if (!conv.convenient) {
    const std::string msg = NotConvenientError(conv.missing_axes).what();
    text << msg << "\n";
    j["faces"] = Json::array();
    j["face_type"] = nullptr;
    j["message"] = msg;
  } else {
    const NewtonBoundaryReport nb = classify_face_type(p, 20, o.seed);
    Json faces = Json::array();
    text << "top faces:\n";
    for (const auto& f : nb.top_faces) {
      Json fj = {{"normal", f.normal},
                 {"dimension", f.dimension},
                 {"radial_degree", f.radial_degree},
                 {"classification", to_string(f.classification)},
                 {"face_function", f.face_poly.to_string()},
                 {"polar_witness", weighted_json(f.polar_witness)}};
      faces.push_back(fj);
      text << "  P=" << weights_str(f.normal) << " dim " << f.dimension << " rdeg " << f.radial_degree << " "
           << to_string(f.classification) << ": " << f.face_poly.to_string() << "\n";
    }
    j["faces"] = faces;
    j["face_type"] = to_string(nb.overall);
    j["subface_property_holds"] = nb.subface_property_holds;
    text << "face type: " << to_string(nb.overall) << "\n";
    text << "subface property: " << (nb.subface_property_holds ? "holds" : "fails") << " on "
         << nb.subface_checks.size() << " random weights\n";

    const NondegeneracyReport nd = nondegeneracy_probe(p, o.trials, 1e-6, o.seed);
    Json probe = {{"trials", nd.trials},
                  {"tol", nd.tol},
                  {"min_residual", nd.min_residual},
                  {"witness_found", nd.witness_found},
                  {"note", nd.note}};
    Json fp = Json::array();
    for (const auto& f : nd.faces) {
      Json e = {{"normal", f.normal},
                {"converged", f.converged},
                {"failed", f.failed},
                {"min_residual", f.min_residual}};
      if (f.witness) e["witness"] = detail::point_json(*f.witness);
      fp.push_back(e);
    }
    probe["faces"] = fp;
    j["nondegeneracy"] = probe;
    text << "non-degeneracy probe: min residual " << format_number(nd.min_residual) << " over " << nd.trials
         << " trials per face, " << (nd.witness_found ? "degeneracy witness found" : "no witness") << " ("
         << nd.note << ")\n";
  }
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitPass;
}

// ---------------------------------------------------------------- pullback

struct PullbackOptions {
  InputOptions in;
  std::string a, b, out_path;
  bool json = false;
};

int run_pullback(const PullbackOptions& o, std::ostream& out) {
  const MixedPolynomial f = load_polynomial(o.in.file, o.in.expr, o.in.n);
  const auto spec = covering_from(o.a, o.b, f.dimension());
  if (!spec) throw UsageError("pullback needs --a and --b");
  const MixedPolynomial g = pullback(f, *spec);
  Json j;
  j["check"] = "pullback";
  j["polynomial"] = g.to_string('w');
  j["covering_degree"] = covering_degree(*spec);
  std::ostringstream text;
  text << g.to_string('w') << "\n";
  text << "covering degree: " << covering_degree(*spec) << "\n";

  if (!f.is_zero()) {
    const HomogeneityReport h = detect_weights(f);
    if (h.radial && h.polar && h.radial->degree != 0 && h.polar->degree != 0) {
      const TransformedWeights t =
          transform_weights(h.radial->weights, h.radial->degree, h.polar->weights, h.polar->degree, *spec);
      j["weights"] = {{"q_hat", rational_str(t.q_hat)}, {"s_hat", rational_str(t.s_hat)},
                      {"radial", t.radial},             {"rdeg", t.m_r},
                      {"polar", t.polar},               {"pdeg", t.m_p}};
      text << "normalized weights: q_hat=" << rational_str(t.q_hat) << " s_hat=" << rational_str(t.s_hat) << "\n";
      text << "radial weight " << weights_str(t.radial) << " rdeg " << t.m_r << ", polar weight "
           << weights_str(t.polar) << " pdeg " << t.m_p << "\n";
    }
  }
  if (!o.out_path.empty()) {
    std::ofstream os(o.out_path);
    if (!os) throw UsageError("cannot write '" + o.out_path + "'");
    os << g.to_string('w') << "\n";
  }
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitPass;
}

// ---------------------------------------------------------------- certify / sample

struct CertifyOptions {
  InputOptions in;
  std::string pullback_of, a, b;
  std::string radius = "0.25,0.5,1";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::string check = "all";
  std::string sphere_weights;
  std::string expected_sign = "+";
  double tube_delta = 0.1;
  int max_iter = 100;
  bool json = false;
  bool tube = false;
  std::string emit_samples;
};

struct Target {
  MixedPolynomial base;
  std::optional<CoveringSpec> spec;
  MixedPolynomial g;
};

Target load_target(const CertifyOptions& o) {
  Target t;
  if (!o.pullback_of.empty()) {
    if (!o.in.file.empty() || !o.in.expr.empty()) throw UsageError("--pullback-of replaces the input polynomial");
    t.base = load_polynomial(o.pullback_of, "", o.in.n);
    t.spec = covering_from(o.a, o.b, t.base.dimension());
    if (!t.spec) throw UsageError("--pullback-of needs --a and --b");
  } else {
    t.base = load_polynomial(o.in.file, o.in.expr, o.in.n);
    t.spec = covering_from(o.a, o.b, t.base.dimension());
  }
  t.g = t.spec ? pullback(t.base, *t.spec) : t.base;
  if (t.g.is_zero()) throw DegenerateInputError("degenerate input: the zero polynomial");
  return t;
}

SampleConfig base_config(const CertifyOptions& o, std::size_t n) {
  SampleConfig cfg;
  cfg.n_samples = o.samples;
  cfg.seed = o.seed;
  cfg.tube_delta = o.tube_delta;
  cfg.max_iter = o.max_iter;
  if (!o.sphere_weights.empty()) {
    for (int w : int_list(o.sphere_weights, n)) cfg.sphere_weights.push_back(w);
  }
  return cfg;
}

std::string report_text(const CertificationReport& r) {
  std::ostringstream os;
  os << "r=" << format_number(r.config.radius) << " " << r.check << ": " << to_string(r.verdict) << ", "
     << r.samples << " samples (" << r.attempted << " seeds, " << r.failed << " failed, " << r.excluded
     << " excluded)";
  if (r.margin) {
    os << ", margin min " << format_number(r.margin->min) << " median " << format_number(r.margin->median)
       << " max " << format_number(r.margin->max);
  }
  if (r.c_threshold) os << ", c_threshold " << format_number(*r.c_threshold);
  if (r.delta) os << ", delta " << format_number(*r.delta);
  os << "\n";
  if (r.witness) {
    os << "  witness (" << r.witness->reason << "): value " << format_number(r.witness->value) << " at "
       << detail::point_json(r.witness->point).dump() << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

void emit_csv(const std::string& path, const std::vector<SampleRecord>& records, std::size_t n) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write '" + path + "'");
  write_samples_csv(os, records, n);
}

int run_certify(const CertifyOptions& o, std::ostream& out) {
  const Target t = load_target(o);
  const std::size_t n = t.g.dimension();
  if (o.expected_sign != "+" && o.expected_sign != "-") throw UsageError("--expected-sign must be + or -");
  const int sign = o.expected_sign == "+" ? 1 : -1;
  std::vector<std::string> checks;
  if (o.check == "all") {
    checks = {"transversality", "contact", "openbook"};
  } else if (o.check == "transversality" || o.check == "contact" || o.check == "openbook") {
    checks = {o.check};
  } else {
    throw UsageError("unknown check '" + o.check + "'");
  }
  std::vector<double> radii;
  for (const auto& s : split(o.radius)) radii.push_back(to_double(s));
  SampleConfig cfg = base_config(o, n);
  for (double r : radii) {
    cfg.radius = r;
    cfg.validate(n);
  }

  const GradientField field(t.g);
  const std::optional<LiftedFunction> lift =
      t.spec ? std::optional<LiftedFunction>(LiftedFunction(t.base, *t.spec)) : std::nullopt;
  std::vector<CertificationReport> reports;
  for (double r : radii) {
    cfg.radius = r;
    for (const auto& c : checks) {
      if (c == "transversality") {
        reports.push_back(transversality_check(field, cfg));
      } else if (c == "contact") {
        reports.push_back(certify_holomorphic_like(field, cfg, sign));
      } else {
        reports.push_back(lift ? certify_open_book(*lift, cfg) : certify_open_book(field, cfg));
      }
    }
  }

  bool violated = false, inconclusive = false;
  std::vector<SampleRecord> records;
  Json arr = Json::array();
  std::string text = "input: " + t.g.to_string('w') + "\n";
  for (const auto& r : reports) {
    violated |= r.verdict == Verdict::Violated;
    inconclusive |= r.verdict == Verdict::Inconclusive;
    records.insert(records.end(), r.records.begin(), r.records.end());
    arr.push_back(detail::report_json(r));
    text += report_text(r);
  }
  emit_csv(o.emit_samples, records, n);
  const int code = violated ? kExitViolated : inconclusive ? kExitInconclusive : kExitPass;
  if (o.json) {
    Json j;
    j["input"] = t.g.to_string('w');
    j["reports"] = arr;
    j["exit_code"] = code;
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
  return code;
}

int run_sample(const CertifyOptions& o, std::ostream& out) {
  const Target t = load_target(o);
  const std::size_t n = t.g.dimension();
  SampleConfig cfg = base_config(o, n);
  cfg.radius = to_double(o.radius);
  cfg.validate(n);
  const GradientField field(t.g);
  const SampleSet set = o.tube ? sample_tube(field, cfg, tube_radius(field, cfg)) : sample_link(field, cfg);
  std::vector<SampleRecord> records;
  double max_g = 0.0, max_rho = 0.0, min_sv = std::numeric_limits<double>::infinity();
  for (const auto& s : set.samples) {
    const double c = n >= 2 ? c_certificate(field, s.point).total : std::numeric_limits<double>::quiet_NaN();
    const double dtr = o.tube ? reeb_pairing(field, s.point) : std::numeric_limits<double>::quiet_NaN();
    records.push_back({s.point, c, dtr, s.jacobian_min_sv});
    max_g = std::max(max_g, s.residual_g);
    max_rho = std::max(max_rho, s.residual_rho);
    min_sv = std::min(min_sv, s.jacobian_min_sv);
  }
  emit_csv(o.emit_samples, records, n);
  const int code = set.samples.empty() ? kExitInconclusive : kExitPass;
  if (o.json) {
    Json j = {{"check", o.tube ? "sample-tube" : "sample-link"},
              {"verdict", set.samples.empty() ? "inconclusive" : "sampled"},
              {"samples", set.samples.size()},
              {"attempted", set.attempted},
              {"failed", set.failed},
              {"max_residual_g", max_g},
              {"max_residual_rho", max_rho},
              {"min_sv", set.samples.empty() ? Json(nullptr) : Json(min_sv)},
              {"config", {{"radius", cfg.radius}, {"n_samples", cfg.n_samples}, {"seed", cfg.seed}}}};
    if (o.tube) j["delta"] = set.delta;
    out << j.dump(2) << "\n";
  } else {
    out << (o.tube ? "tube" : "link") << " samples at r=" << format_number(cfg.radius) << ": "
        << set.samples.size() << " of " << set.attempted << " seeds converged\n";
    if (!set.samples.empty()) {
      out << "max |g| residual " << format_number(max_g) << ", max |rho - r^2| " << format_number(max_rho)
          << ", min singular value " << format_number(min_sv) << "\n";
    }
  }
  return code;
}

// ---------------------------------------------------------------- identity-check

struct IdentityOptions {
  CertifyOptions target;
  std::string which;
  std::size_t trials = 100;
  bool json = false;
};

int run_identity(const IdentityOptions& o, std::ostream& out) {
  const Target t = load_target(o.target);
  const std::uint64_t seed = o.target.seed;
  IdentityResult res;
  if (o.which == "euler") {
    res = check_euler(t.g);
  } else if (o.which == "chainrule") {
    res = check_chain_rule(t.g, o.trials, seed);
  } else if (o.which == "fourform") {
    res = check_four_form(t.g, o.trials, seed);
  } else if (o.which == "cab" || o.which == "positivity") {
    if (!t.spec) throw UsageError(o.which + " needs --pullback-of (or an input) with --a and --b");
    res = o.which == "cab" ? check_c_factorization(t.base, *t.spec, o.trials, seed)
                           : check_positivity(t.base, *t.spec, o.trials, seed);
  } else {
    throw UsageError("unknown identity '" + o.which + "'");
  }
  if (o.json) {
    out << to_json(res) << "\n";
  } else {
    out << res.name << ": " << (res.passed ? "pass" : "fail") << ", " << res.trials << " trials, max error "
        << format_number(res.max_error) << " (threshold " << format_number(res.threshold) << ")\n";
    out << "  " << res.detail << "\n";
  }
  return res.passed ? kExitPass : kExitViolated;
}

void add_target_options(CLI::App* cmd, CertifyOptions& o) {
  add_input_options(cmd, o.in);
  cmd->add_option("--pullback-of", o.pullback_of, "Certify the pull-back of the polynomial in this file");
  cmd->add_option("--a", o.a, "Covering exponents a (integer or comma list)");
  cmd->add_option("--b", o.b, "Covering exponents b (integer or comma list)");
  cmd->add_option("--seed", o.seed, "Root random seed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed polynomial links: weights, Newton boundary, coverings, contact certificates", "mixlink"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Homogeneity, Newton boundary and non-degeneracy probe");
  add_input_options(analyze, ao.in);
  analyze->add_flag("--json", ao.json, "JSON output");
  analyze->add_option("--trials", ao.trials, "Probe trials per face")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", ao.seed, "Root random seed");

  PullbackOptions po;
  auto* pb = app.add_subcommand("pullback", "Pull back by a mixed cyclic covering");
  add_input_options(pb, po.in);
  pb->add_option("--a", po.a, "Covering exponents a (integer or comma list)")->required();
  pb->add_option("--b", po.b, "Covering exponents b (integer or comma list)")->required();
  pb->add_option("--out", po.out_path, "Write the pull-back to this file");
  pb->add_flag("--json", po.json, "JSON output");

  CertifyOptions co;
  auto* cert = app.add_subcommand("certify", "Certify transversality, contact sign and open-book positivity on samples");
  add_target_options(cert, co);
  cert->add_option("--radius", co.radius, "Comma-separated radii")->capture_default_str();
  cert->add_option("--samples", co.samples, "Samples per radius and check")->check(CLI::PositiveNumber);
  cert->add_option("--check", co.check, "transversality|contact|openbook|all")->capture_default_str();
  cert->add_option("--sphere-weights", co.sphere_weights, "Weights a of the sphere rho_a = r^2");
  cert->add_option("--expected-sign", co.expected_sign, "Expected sign of C: + or -")->capture_default_str();
  cert->add_option("--tube-delta", co.tube_delta, "Relative tube radius for the open-book check");
  cert->add_option("--max-iter", co.max_iter, "Gauss-Newton iterations")->check(CLI::PositiveNumber);
  cert->add_option("--emit-samples", co.emit_samples, "Write sample CSV to this path");
  cert->add_flag("--json", co.json, "JSON output");

  CertifyOptions so;
  so.radius = "1";
  auto* samp = app.add_subcommand("sample", "Sample the link or a tube around it");
  add_target_options(samp, so);
  samp->add_option("--radius", so.radius, "Sphere radius")->capture_default_str();
  samp->add_option("--samples", so.samples, "Number of samples")->check(CLI::PositiveNumber);
  samp->add_option("--sphere-weights", so.sphere_weights, "Weights a of the sphere rho_a = r^2");
  samp->add_option("--tube-delta", so.tube_delta, "Relative tube radius");
  samp->add_flag("--tube", so.tube, "Sample {|g| = delta} instead of the link");
  samp->add_option("--emit-samples", so.emit_samples, "Write sample CSV to this path");
  samp->add_flag("--json", so.json, "JSON output");

  IdentityOptions io;
  auto* ident = app.add_subcommand("identity-check", "Check a closed-form identity at random points");
  add_target_options(ident, io.target);
  ident->add_option("--which", io.which, "euler|cab|fourform|positivity|chainrule")->required();
  ident->add_option("--trials", io.trials, "Random points")->check(CLI::PositiveNumber);
  ident->add_flag("--json", io.json, "JSON output");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(ao, out);
    if (pb->parsed()) return run_pullback(po, out);
    if (cert->parsed()) return run_certify(co, out);
    if (samp->parsed()) return run_sample(so, out);
    if (ident->parsed()) return run_identity(io, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mixlink
