#include "mixlink/link_certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mixlink/detail/gauss_newton.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/newton_boundary.hpp"
#include "mixlink/random.hpp"

namespace mixlink {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSignTol = 1e-9;        // |C| / C.scale() below this is borderline
constexpr double kCorrectionTol = 1e-9;  // correction / (||v11||^2 + ||v21||^2)
constexpr std::uint64_t kScaleStream = 1ull << 40;

ComplexVector sphere_seed(std::size_t n, const WeightVector& a, double r, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::substream(seed, index);
  ComplexVector z(n);
  for (auto& x : z) x = rng.complex_normal();
  const double rho = weighted_radius(z, a).value;
  const double s = r / std::sqrt(rho);
  for (auto& x : z) x *= s;
  return z;
}

std::size_t attempt_limit(const SampleConfig& cfg) {
  return cfg.max_attempts != 0 ? cfg.max_attempts : 20 * cfg.n_samples;
}

double c_total_or_nan(const GradientField& g, ComplexSpan z) {
  return g.dimension() >= 2 ? c_certificate(g, z).total : kNaN;
}

void fill_common(CertificationReport& rep, const SampleSet& set, const SampleConfig& cfg) {
  rep.config = cfg;
  rep.attempted = set.attempted;
  rep.failed = set.failed;
}

}  // namespace

void SampleConfig::validate(std::size_t n) const {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (n_samples == 0) throw std::invalid_argument("sample count must be at least 1");
  if (max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
  if (!(tol_residual > 0.0) || !(tol_rank > 0.0) || !(tube_delta > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (!sphere_weights.empty()) {
    if (sphere_weights.size() != n) throw DimensionError("sphere weights do not match dimension");
    for (long w : sphere_weights) {
      if (w <= 0) throw std::invalid_argument("sphere weights must be positive");
    }
  }
}

WeightVector SampleConfig::weights(std::size_t n) const {
  return sphere_weights.empty() ? WeightVector(n, 1) : sphere_weights;
}

SampleSet sample_link(const GradientField& g, const SampleConfig& cfg) {
  const std::size_t n = g.dimension();
  if (g.polynomial().is_zero()) throw DegenerateInputError("cannot sample the zero set of the zero polynomial");
  if (n < 2) throw DimensionError("link sampling needs n >= 2");
  cfg.validate(n);
  const WeightVector a = cfg.weights(n);
  const double r2 = cfg.radius * cfg.radius;
  const NumericPolynomial num(g.polynomial());

  auto g_ok = [&](ComplexSpan z, double gabs) { return gabs <= cfg.tol_residual * std::min(1.0, num.abs_sum(z)); };

  // Rows scaled by r^2 and by the size of g at the seed.
  double g_scale = 1.0;
  detail::ConstraintFn fn = [&](ComplexSpan z, Eigen::VectorXd& F, Eigen::MatrixXd& J) {
    const RadiusValue rv = weighted_radius(z, a);
    const FieldValue v = g.at(z);
    F.resize(3);
    J.resize(3, static_cast<Eigen::Index>(2 * n));
    F(0) = (rv.value - r2) / r2;
    F(1) = v.value.real() / g_scale;
    F(2) = v.value.imag() / g_scale;
    detail::set_real_gradient_row(J, 0, rv.gradient);
    detail::set_real_gradient_row(J, 1, hermitian_gradient_re(v));
    detail::set_real_gradient_row(J, 2, hermitian_gradient_im(v));
    J.row(0) /= r2;
    J.bottomRows(2) /= g_scale;
  };
  detail::ProjectionOptions opt;
  opt.max_iter = cfg.max_iter;
  opt.converged = [&](ComplexSpan z, const Eigen::VectorXd& F) {
    return std::abs(F(0)) * r2 <= cfg.tol_residual && g_ok(z, std::hypot(F(1), F(2)) * g_scale);
  };

  SampleSet out;
  const std::size_t limit = attempt_limit(cfg);
  while (out.samples.size() < cfg.n_samples && out.attempted < limit) {
    const ComplexVector seed = sphere_seed(n, a, cfg.radius, cfg.seed, out.attempted);
    ++out.attempted;
    g_scale = std::max(num.abs_sum(seed), std::numeric_limits<double>::min());
    const auto res = detail::project(seed, fn, opt);
    if (!res.converged) {
      ++out.failed;
      continue;
    }
    LinkSample s;
    s.point = res.z;
    s.residual_g = std::abs(g.value(s.point));
    s.residual_rho = std::abs(weighted_radius(s.point, a).value - r2);
    Eigen::VectorXd F;
    Eigen::MatrixXd J;
    fn(s.point, F, J);
    s.jacobian_min_sv = detail::min_singular_value_normalized(J);
    s.smooth = s.jacobian_min_sv >= cfg.tol_rank;
    out.samples.push_back(std::move(s));
  }
  return out;
}

SampleSet sample_tube(const GradientField& g, const SampleConfig& cfg, double delta) {
  const std::size_t n = g.dimension();
  if (g.polynomial().is_zero()) throw DegenerateInputError("cannot sample around the zero polynomial");
  if (!(delta > 0.0)) throw std::invalid_argument("tube radius must be positive");
  cfg.validate(n);
  const WeightVector a = cfg.weights(n);
  const double r2 = cfg.radius * cfg.radius;
  const double d2 = delta * delta;

  detail::ConstraintFn fn = [&](ComplexSpan z, Eigen::VectorXd& F, Eigen::MatrixXd& J) {
    const RadiusValue rv = weighted_radius(z, a);
    const FieldValue v = g.at(z);
    F.resize(2);
    J.resize(2, static_cast<Eigen::Index>(2 * n));
    F(0) = (rv.value - r2) / r2;
    F(1) = (std::norm(v.value) - d2) / d2;
    detail::set_real_gradient_row(J, 0, rv.gradient);
    detail::set_real_gradient_row(J, 1, hermitian_gradient_abs2(v));
    J.row(0) /= r2;
    J.row(1) /= d2;
  };
  detail::ProjectionOptions opt;
  opt.max_iter = cfg.max_iter;
  opt.converged = [&](ComplexSpan, const Eigen::VectorXd& F) {
    return std::abs(F(0)) * r2 <= cfg.tol_residual && std::abs(F(1)) <= cfg.tol_residual;
  };

  SampleSet out;
  out.delta = delta;
  const std::size_t limit = attempt_limit(cfg);
  while (out.samples.size() < cfg.n_samples && out.attempted < limit) {
    const ComplexVector seed = sphere_seed(n, a, cfg.radius, cfg.seed, out.attempted);
    ++out.attempted;
    const auto res = detail::project(seed, fn, opt);
    if (!res.converged) {
      ++out.failed;
      continue;
    }
    LinkSample s;
    s.point = res.z;
    s.residual_g = std::abs(std::abs(g.value(s.point)) - delta);
    s.residual_rho = std::abs(weighted_radius(s.point, a).value - r2);
    Eigen::VectorXd F;
    Eigen::MatrixXd J;
    fn(s.point, F, J);
    s.jacobian_min_sv = detail::min_singular_value_normalized(J);
    s.smooth = s.jacobian_min_sv >= cfg.tol_rank;
    out.samples.push_back(std::move(s));
  }
  return out;
}

double tube_radius(const GradientField& g, const SampleConfig& cfg) {
  const std::size_t n = g.dimension();
  cfg.validate(n);
  const WeightVector a = cfg.weights(n);
  const bool unit_sphere = std::all_of(a.begin(), a.end(), [](long w) { return w == 1; });
  const HomogeneityReport h = detect_weights(g.polynomial());
  if (unit_sphere && h.radial && h.radial->degree > 0 &&
      std::all_of(h.radial->weights.begin(), h.radial->weights.end(), [](long w) { return w == 1; })) {
    return cfg.tube_delta * std::pow(cfg.radius, static_cast<double>(h.radial->degree));
  }
  std::vector<double> mags;
  for (std::uint64_t k = 0; k < 64; ++k) {
    mags.push_back(std::abs(g.value(sphere_seed(n, a, cfg.radius, cfg.seed, kScaleStream + k))));
  }
  std::nth_element(mags.begin(), mags.begin() + 32, mags.end());
  return cfg.tube_delta * mags[32];
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedOnSamples:
      return "certified-on-samples";
    case Verdict::Violated:
      return "violated";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Margins summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("no values to summarize");
  std::sort(values.begin(), values.end());
  const auto at = [&](double q) { return values[static_cast<std::size_t>(q * static_cast<double>(values.size() - 1))]; };
  return Margins{values.front(), at(0.05), at(0.5), at(0.95), values.back()};
}

CertificationReport transversality_check(const GradientField& g, const SampleConfig& cfg) {
  const SampleSet set = sample_link(g, cfg);
  CertificationReport rep;
  rep.check = "transversality";
  fill_common(rep, set, cfg);
  rep.samples = set.samples.size();
  if (set.samples.empty()) {
    rep.notes.push_back("no converged link samples");
    return rep;
  }
  std::vector<double> sv;
  const LinkSample* worst = nullptr;
  for (const auto& s : set.samples) {
    sv.push_back(s.jacobian_min_sv);
    if (!s.smooth) ++rep.excluded;
    if (worst == nullptr || s.jacobian_min_sv < worst->jacobian_min_sv) worst = &s;
    rep.records.push_back({s.point, c_total_or_nan(g, s.point), kNaN, s.jacobian_min_sv});
  }
  rep.margin = summarize(sv);
  if (!worst->smooth) {
    rep.verdict = Verdict::Violated;
    rep.witness = Witness{worst->point, worst->jacobian_min_sv, "rank-deficient Jacobian of (rho, Re g, Im g)"};
  } else {
    rep.verdict = Verdict::CertifiedOnSamples;
  }
  return rep;
}

CertificationReport certify_holomorphic_like(const GradientField& g, const SampleConfig& cfg, int expected_sign) {
  if (expected_sign != 1 && expected_sign != -1) throw std::invalid_argument("expected sign must be +1 or -1");
  const SampleSet set = sample_link(g, cfg);
  CertificationReport rep;
  rep.check = "contact";
  fill_common(rep, set, cfg);
  rep.notes.push_back(expected_sign > 0 ? "expected sign: C > 0" : "expected sign: C < 0");
  std::vector<double> signed_c;
  std::optional<Witness> violation, borderline;
  double worst_violation = 0.0;
  for (const auto& s : set.samples) {
    const CCertificate c = c_certificate(g, s.point);
    rep.records.push_back({s.point, c.total, kNaN, s.jacobian_min_sv});
    if (!s.smooth) {
      ++rep.excluded;
      continue;
    }
    const double v = expected_sign * c.total;
    const double rel = c.scale() > 0.0 ? v / c.scale() : 0.0;
    if (std::abs(rel) <= kSignTol) {
      ++rep.excluded;
      if (!borderline) borderline = Witness{s.point, c.total, "C within tolerance of 0"};
      continue;
    }
    signed_c.push_back(v);
    if (rel < 0.0 && (!violation || rel < worst_violation)) {
      worst_violation = rel;
      violation = Witness{s.point, c.total, "C has the wrong sign"};
    }
  }
  rep.samples = signed_c.size();
  if (!signed_c.empty()) rep.margin = summarize(signed_c);
  if (violation) {
    rep.verdict = Verdict::Violated;
    rep.witness = violation;
  } else if (borderline) {
    rep.verdict = Verdict::Inconclusive;
    rep.witness = borderline;
  } else if (signed_c.empty()) {
    rep.notes.push_back("no smooth link samples");
  } else {
    rep.verdict = Verdict::CertifiedOnSamples;
  }
  return rep;
}

CertificationReport certify_open_book(const GradientField& g, const SampleConfig& cfg) {
  const double delta = tube_radius(g, cfg);
  const SampleSet set = sample_tube(g, cfg, delta);
  CertificationReport rep;
  rep.check = "openbook";
  fill_common(rep, set, cfg);
  rep.delta = delta;
  std::vector<double> dtr;
  double threshold = 0.0;
  std::optional<Witness> witness;
  std::size_t negative = 0;
  for (const auto& s : set.samples) {
    const ContactQuantities q = contact_quantities(g, s.point);
    rep.records.push_back({s.point, g.dimension() >= 2 ? q.c.total : kNaN, q.dtheta_R, s.jacobian_min_sv});
    dtr.push_back(q.dtheta_R);
    if (q.dtheta_R > 0.0) continue;
    ++negative;
    const double scale = norm2(q.v11) + norm2(q.v21);
    if (q.correction > kCorrectionTol * scale && q.correction > 0.0) {
      threshold = std::max(threshold, -2.0 * std::norm(q.g_value) * q.dtheta_R / q.correction);
    } else if (!witness || q.dtheta_R < witness->value) {
      witness = Witness{s.point, q.dtheta_R, "d theta(R) <= 0 with non-positive correction"};
    }
  }
  rep.samples = dtr.size();
  if (dtr.empty()) {
    rep.notes.push_back("no converged tube samples");
    return rep;
  }
  rep.margin = summarize(dtr);
  if (negative == dtr.size()) rep.notes.push_back("d theta(R) < 0 at every sample: orientation-reversed open book");
  if (witness) {
    rep.verdict = Verdict::Violated;
    rep.witness = witness;
  } else {
    rep.verdict = Verdict::CertifiedOnSamples;
    rep.c_threshold = threshold;
    rep.notes.push_back(negative == 0 ? "d theta(R) > 0 at every sample"
                                     : "d theta(R_c) > 0 at every sample for c > c_threshold");
  }
  return rep;
}

CertificationReport certify_open_book(const LiftedFunction& lift, const SampleConfig& cfg) {
  CertificationReport rep = certify_open_book(lift.lifted(), cfg);
  try {
    const NondegeneracyReport nd = nondegeneracy_probe(lift.base().polynomial(), 20, 1e-6, cfg.seed);
    rep.notes.push_back(nd.witness_found ? "base function: degeneracy witness found" : "base function: " + nd.note);
  } catch (const Error& e) {
    rep.notes.push_back(std::string("base function not probed: ") + e.what());
  }
  return rep;
}

}  // namespace mixlink
