#pragma once

// Damped Gauss-Newton projection of a point of C^n = R^{2n} onto the common
// zero set of a few real constraints. Minimum-norm steps via SVD least
// squares, halving line search on the residual norm.

#include <functional>

#include <Eigen/Dense>

#include "mixlink/mixed_poly.hpp"

namespace mixlink::detail {

/// Fills residual F (m) and real Jacobian J (m x 2n) at z.
using ConstraintFn = std::function<void(ComplexSpan z, Eigen::VectorXd& F, Eigen::MatrixXd& J)>;

struct ProjectionOptions {
  int max_iter = 100;
  /// Early-exit test; iteration also stops when no step reduces ||F||.
  std::function<bool(ComplexSpan z, const Eigen::VectorXd& F)> converged;
  /// Optional guard evaluated after each accepted step; false aborts
  /// (the result is then reported as not converged).
  std::function<bool(ComplexSpan z)> admissible;
};

struct ProjectionResult {
  ComplexVector z;
  Eigen::VectorXd residual;
  int iterations = 0;
  bool converged = false;
};

ProjectionResult project(ComplexVector z0, const ConstraintFn& fn, const ProjectionOptions& opt);

/// Row of the real Jacobian for a real function with hermitian gradient `grad`:
/// dh(v) = Re(v, grad) = sum (v_x Re grad + v_y Im grad).
void set_real_gradient_row(Eigen::MatrixXd& J, Eigen::Index row, ComplexSpan grad);

/// Smallest singular value of J after normalizing each row to unit length
/// (0 if some row vanishes).
double min_singular_value_normalized(const Eigen::MatrixXd& J);

}  // namespace mixlink::detail
