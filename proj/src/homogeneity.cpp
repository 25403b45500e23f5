#include "mixlink/homogeneity.hpp"

#include <stdexcept>

#include "mixlink/detail/exact_linalg.hpp"
#include "mixlink/errors.hpp"

namespace mixlink {

namespace {

void check_weights(const WeightVector& w, std::size_t n) {
  if (w.size() != n) {
    throw DimensionError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                         std::to_string(n));
  }
}

enum class Kind { Radial, Polar };

ExponentVector support_vector(const Monomial& m, Kind kind) {
  ExponentVector v(m.nu.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = kind == Kind::Radial ? m.nu[j] + m.mu[j] : m.nu[j] - m.mu[j];
  return v;
}

// Rows v_t - v_0 of the equal-degree system for one or more degree kinds.
detail::RationalMatrix difference_rows(const MixedPolynomial& p, std::initializer_list<Kind> kinds) {
  detail::RationalMatrix rows;
  const auto& terms = p.terms();
  const Monomial& first = terms.begin()->first;
  for (Kind kind : kinds) {
    const ExponentVector v0 = support_vector(first, kind);
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
      const ExponentVector v = support_vector(it->first, kind);
      detail::RationalVector row(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) row[j] = v[j] - v0[j];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

long degree_of(const Monomial& m, const WeightVector& w, Kind kind) {
  return kind == Kind::Radial ? radial_degree(m, w) : polar_degree(m, w);
}

}  // namespace

long radial_degree(const Monomial& m, const WeightVector& q) {
  check_weights(q, m.nu.size());
  long d = 0;
  for (std::size_t j = 0; j < q.size(); ++j) d += q[j] * (m.nu[j] + m.mu[j]);
  return d;
}

long polar_degree(const Monomial& m, const WeightVector& p) {
  check_weights(p, m.nu.size());
  long d = 0;
  for (std::size_t j = 0; j < p.size(); ++j) d += p[j] * (m.nu[j] - m.mu[j]);
  return d;
}

long radial_degree(const MixedTerm& term, const WeightVector& q) { return radial_degree(Monomial{term.nu, term.mu}, q); }
long polar_degree(const MixedTerm& term, const WeightVector& p) { return polar_degree(Monomial{term.nu, term.mu}, p); }

HomogeneityReport detect_weights(const MixedPolynomial& p) {
  if (p.is_zero()) throw DegenerateInputError("weight detection on the zero polynomial");
  const std::size_t n = p.dimension();
  const Monomial& first = p.terms().begin()->first;
  HomogeneityReport report;

  // A constant has radial degree 0 under every weight; the definition needs m_r != 0.
  auto radial_ok = [&](const detail::IntVector& w) { return radial_degree(first, w) != 0; };

  if (auto joint = detail::find_positive_solution(difference_rows(p, {Kind::Radial, Kind::Polar}), n, radial_ok)) {
    const auto rad_null = detail::nullspace(difference_rows(p, {Kind::Radial}), n).size();
    const auto pol_null = detail::nullspace(difference_rows(p, {Kind::Polar}), n).size();
    report.radial = WeightedDegree{joint->weights, degree_of(first, joint->weights, Kind::Radial), rad_null == 1};
    report.polar = WeightedDegree{joint->weights, degree_of(first, joint->weights, Kind::Polar), pol_null == 1};
    report.strongly_polar = true;
  } else {
    if (auto r = detail::find_positive_solution(difference_rows(p, {Kind::Radial}), n, radial_ok)) {
      report.radial = WeightedDegree{r->weights, degree_of(first, r->weights, Kind::Radial), r->nullity == 1};
    }
    if (auto s = detail::find_positive_solution(difference_rows(p, {Kind::Polar}), n)) {
      report.polar = WeightedDegree{s->weights, degree_of(first, s->weights, Kind::Polar), s->nullity == 1};
    }
  }
  if (report.polar) report.polar_degree_zero = report.polar->degree == 0;
  report.strongly_polar_positive = report.strongly_polar && report.polar->degree > 0;
  return report;
}

std::optional<WeightedDegree> find_positive_polar_weights(const MixedPolynomial& p) {
  if (p.is_zero()) throw DegenerateInputError("weight detection on the zero polynomial");
  const Monomial& first = p.terms().begin()->first;
  auto positive = [&](const detail::IntVector& w) { return polar_degree(first, w) > 0; };
  auto s = detail::find_positive_solution(difference_rows(p, {Kind::Polar}), p.dimension(), positive);
  if (!s) return std::nullopt;
  return WeightedDegree{s->weights, polar_degree(first, s->weights), s->nullity == 1};
}

bool EulerResiduals::all_zero() const {
  return radial.is_zero() && polar.is_zero() && (!strong_holo || strong_holo->is_zero()) &&
         (!strong_anti || strong_anti->is_zero());
}

EulerResiduals euler_residuals(const MixedPolynomial& p, const WeightVector& q, long m_r, const WeightVector& pw,
                               long m_p) {
  const std::size_t n = p.dimension();
  check_weights(q, n);
  check_weights(pw, n);
  for (long x : q) {
    if (x <= 0) throw std::invalid_argument("radial weights must be positive");
  }
  for (long x : pw) {
    if (x <= 0) throw std::invalid_argument("polar weights must be positive");
  }

  MixedPolynomial radial_sum(n), polar_sum(n), holo_sum(n), anti_sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MixedPolynomial zf = p.wirtinger_dz(i).times_variable(i);
    const MixedPolynomial zbf = p.wirtinger_dzbar(i).times_conj_variable(i);
    radial_sum = radial_sum + (zf + zbf) * GaussianRational(q[i]);
    polar_sum = polar_sum + (zf - zbf) * GaussianRational(pw[i]);
    holo_sum = holo_sum + zf * GaussianRational(pw[i]);
    anti_sum = anti_sum + zbf * GaussianRational(pw[i]);
  }
  EulerResiduals out{p * GaussianRational(m_r) - radial_sum, p * GaussianRational(m_p) - polar_sum,
                     std::nullopt, std::nullopt, false};
  if (q == pw) {
    out.non_integral_strong_degree = (m_r + m_p) % 2 != 0;
    out.strong_holo = holo_sum - p * GaussianRational(mpq_class(m_r + m_p, 2));
    out.strong_anti = anti_sum - p * GaussianRational(mpq_class(m_r - m_p, 2));
  }
  return out;
}

}  // namespace mixlink
