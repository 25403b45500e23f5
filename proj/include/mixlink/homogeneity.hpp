#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixlink/mixed_poly.hpp"

namespace mixlink {

/// Positive integer weight vector (Q or P).
using WeightVector = std::vector<long>;

/// Sum q_j (nu_j + mu_j).
long radial_degree(const MixedTerm& term, const WeightVector& q);
long radial_degree(const Monomial& m, const WeightVector& q);
/// Sum p_j (nu_j - mu_j).
long polar_degree(const MixedTerm& term, const WeightVector& p);
long polar_degree(const Monomial& m, const WeightVector& p);

struct WeightedDegree {
  WeightVector weights;  // primitive, strictly positive
  long degree = 0;
  bool unique = true;  // false when the support leaves a >= 2 dimensional family
};

struct HomogeneityReport {
  std::optional<WeightedDegree> radial;
  std::optional<WeightedDegree> polar;
  bool strongly_polar = false;
  bool strongly_polar_positive = false;
  /// polar weighted homogeneous with m_p = 0 (outside the m_p != 0 convention).
  bool polar_degree_zero = false;
};

/// Detects radial and polar weighted homogeneity with exact rational linear
/// algebra. Throws DegenerateInputError for the zero polynomial.
HomogeneityReport detect_weights(const MixedPolynomial& p);

/// Polar weights P' with strictly positive polar degree, if any exist.
std::optional<WeightedDegree> find_positive_polar_weights(const MixedPolynomial& p);

/// Symbolic residuals of the Euler equalities. Each is identically zero when
/// p is homogeneous of the stated type.
///   radial:       m_r f - sum q_i (z_i f_{z_i} + zbar_i f_{zbar_i})
///   polar:        m_p f - sum p_i (z_i f_{z_i} - zbar_i f_{zbar_i})
///   strong_holo:  sum p_j z_j f_{z_j} - ((m_r + m_p)/2) f        (Q = P only)
///   strong_anti:  sum p_j zbar_j f_{zbar_j} - ((m_r - m_p)/2) f  (Q = P only)
struct EulerResiduals {
  MixedPolynomial radial;
  MixedPolynomial polar;
  std::optional<MixedPolynomial> strong_holo;
  std::optional<MixedPolynomial> strong_anti;
  /// Q = P but m_r + m_p is odd: the strong residuals use the exact rational
  /// half-degrees and cannot vanish for a nonzero f.
  bool non_integral_strong_degree = false;

  bool all_zero() const;
};

EulerResiduals euler_residuals(const MixedPolynomial& p, const WeightVector& q, long m_r,
                               const WeightVector& pw, long m_p);

}  // namespace mixlink
