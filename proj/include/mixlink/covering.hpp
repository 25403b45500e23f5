#pragma once

#include <vector>

#include <gmpxx.h>

#include "mixlink/homogeneity.hpp"
#include "mixlink/mixed_poly.hpp"

namespace mixlink {

/// Mixed cyclic covering w -> (w_1^{a_1} wbar_1^{b_1}, ..., w_n^{a_n} wbar_n^{b_n}).
/// Valid specs have a_j > b_j >= 0 for all j (holomorphic regime) or
/// b_j > a_j >= 0 for all j (anti-holomorphic regime).
class CoveringSpec {
 public:
  /// Throws InvalidCoveringError for a_j = b_j, negative entries, length
  /// mismatch or mixed orientation.
  CoveringSpec(std::vector<int> a, std::vector<int> b);
  /// Homogeneous spec (a, ..., a), (b, ..., b).
  static CoveringSpec homogeneous(std::size_t n, int a, int b);

  std::size_t dimension() const noexcept { return a_.size(); }
  const std::vector<int>& a() const noexcept { return a_; }
  const std::vector<int>& b() const noexcept { return b_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  /// +1 when a >> b, -1 when b >> a.
  int orientation() const noexcept { return orientation_; }

  /// phi(w).
  ComplexVector apply(ComplexSpan w) const;

 private:
  std::vector<int> a_;
  std::vector<int> b_;
  bool homogeneous_ = false;
  int orientation_ = 1;
};

/// g(w, wbar) = f(phi(w, wbar)), expanded exactly.
MixedPolynomial pullback(const MixedPolynomial& f, const CoveringSpec& spec);

/// prod_j |a_j - b_j|.
long covering_degree(const CoveringSpec& spec);

struct TransformedWeights {
  std::vector<mpq_class> q_hat;  // q_j / (d_r (a_j + b_j))
  std::vector<mpq_class> s_hat;  // s_j / (d_p (a_j - b_j))
  WeightVector radial;           // primitive positive integer version of q_hat
  long m_r = 0;                  // radial degree of the pull-back under `radial`
  WeightVector polar;            // primitive positive integer version of s_hat
  long m_p = 0;                  // polar degree under `polar` (negative in the anti regime)
};

/// Normalized weights of the pull-back: monomials of f with radial Q-degree
/// d_r and polar S-degree d_p pull back to radial q_hat-degree 1 and polar
/// s_hat-degree 1. Throws std::invalid_argument when d_r or d_p is 0.
TransformedWeights transform_weights(const WeightVector& q, long d_r, const WeightVector& s, long d_p,
                                     const CoveringSpec& spec);

}  // namespace mixlink
