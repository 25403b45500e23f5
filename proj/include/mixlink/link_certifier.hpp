#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixlink/geometry.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/numeric.hpp"

namespace mixlink {

struct SampleConfig {
  double radius = 1.0;
  WeightVector sphere_weights;  // empty means all ones
  std::size_t n_samples = 200;
  int max_iter = 100;
  double tol_residual = 1e-11;
  double tol_rank = 1e-8;
  std::uint64_t seed = 1;
  double tube_delta = 0.1;
  std::size_t max_attempts = 0;  // 0 means 20 * n_samples

  /// Throws std::invalid_argument for non-positive radius or tolerances.
  void validate(std::size_t n) const;
  WeightVector weights(std::size_t n) const;
};

struct LinkSample {
  ComplexVector point;
  double residual_g = 0.0;    // |g| on the link, ||g|^2 - delta^2| on a tube
  double residual_rho = 0.0;  // |rho_a - r^2|
  double jacobian_min_sv = 0.0;
  bool smooth = false;
};

struct SampleSet {
  std::vector<LinkSample> samples;
  std::size_t attempted = 0;
  std::size_t failed = 0;
  double delta = 0.0;  // tube radius, 0 for link samples
};

/// Points of K_r = g^{-1}(0) ∩ {rho_a = r^2} by Gauss-Newton from random sphere seeds.
SampleSet sample_link(const GradientField& g, const SampleConfig& cfg);
/// Points of {|g| = delta} ∩ {rho_a = r^2}.
SampleSet sample_tube(const GradientField& g, const SampleConfig& cfg, double delta);
/// delta = tube_delta * r^{m_r} for g radially homogeneous with unit weights,
/// otherwise tube_delta times the median of |g| at sphere seeds.
double tube_radius(const GradientField& g, const SampleConfig& cfg);

enum class Verdict { CertifiedOnSamples, Violated, Inconclusive };
std::string to_string(Verdict v);

struct Witness {
  ComplexVector point;
  double value = 0.0;
  std::string reason;
};

struct Margins {
  double min = 0.0;
  double q05 = 0.0;
  double median = 0.0;
  double q95 = 0.0;
  double max = 0.0;
};
Margins summarize(std::vector<double> values);

/// One evaluated point, for plotting; NaN where a quantity is undefined.
struct SampleRecord {
  ComplexVector point;
  double c_total = 0.0;
  double dtheta_R = 0.0;
  double min_sv = 0.0;
};

struct CertificationReport {
  std::string check;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Margins> margin;
  std::size_t samples = 0;
  std::size_t attempted = 0;
  std::size_t failed = 0;
  std::size_t excluded = 0;  // non-smooth or borderline samples
  std::optional<Witness> witness;
  std::optional<double> c_threshold;
  std::optional<double> delta;
  SampleConfig config;
  std::vector<std::string> notes;
  std::vector<SampleRecord> records;
};

CertificationReport transversality_check(const GradientField& g, const SampleConfig& cfg);
/// expected_sign +1: C > 0 on the link (positive contact), -1: C < 0.
CertificationReport certify_holomorphic_like(const GradientField& g, const SampleConfig& cfg, int expected_sign = 1);
/// d theta(R) and the threshold c for the modified form on {|g| = delta} ∩ S_r.
CertificationReport certify_open_book(const GradientField& g, const SampleConfig& cfg);
CertificationReport certify_open_book(const LiftedFunction& lift, const SampleConfig& cfg);

}  // namespace mixlink
