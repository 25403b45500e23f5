#pragma once

#include <optional>

#include <Eigen/Dense>

#include "mixlink/covering.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/numeric.hpp"

namespace mixlink {

struct RadiusValue {
  double value = 0.0;
  ComplexVector gradient;  // hermitian gradient 2 (a_1 z_1, ..., a_n z_n)
};

/// rho_a(z) = sum a_j |z_j|^2.
RadiusValue weighted_radius(ComplexSpan z, const WeightVector& a);
/// rho(z) = ||z||^2.
RadiusValue weighted_radius(ComplexSpan z);

struct CCertificate {
  Eigen::MatrixXd matrix;  // C_{a,b} for a < b in the upper triangle, zero elsewhere
  double total = 0.0;      // C = sum_{a<b} C_{a,b}
  double positive = 0.0;   // sum |zbar_a g_{z_b} - zbar_b g_{z_a}|^2
  double negative = 0.0;   // sum |z_a g_{zbar_b} - z_b g_{zbar_a}|^2
  double scale() const noexcept { return positive + negative; }
};

/// C_{a,b} = |zbar_a g_{z_b} - zbar_b g_{z_a}|^2 - |z_a g_{zbar_b} - z_b g_{zbar_a}|^2.
CCertificate c_certificate(const FieldValue& g, ComplexSpan z);
CCertificate c_certificate(const GradientField& g, ComplexSpan z);
CCertificate c_certificate(const MixedPolynomial& g, ComplexSpan z);

/// Closed form of C_{j,k} for g = phi_{a,b}^* f with f holomorphic and a
/// homogeneous spec, from the derivatives of f at phi(w).
Eigen::MatrixXd c_factored(const GradientField& f, const CoveringSpec& spec, ComplexSpan w);

/// grad theta for theta = arg g: i (conj(g_z)/conj(g) - g_zbar/g).
/// Throws OnZeroSetError when |g| < zero_tol.
ComplexVector theta_gradient(const FieldValue& g, double zero_tol = 1e-14);
/// d theta(v) = Re(v, grad theta).
double dtheta(const FieldValue& g, ComplexSpan v, double zero_tol = 1e-14);

/// R(z) = i z / (2 rho(z)). Throws std::invalid_argument at the origin.
ComplexVector reeb_vector(ComplexSpan z);
/// d theta(R).
double reeb_pairing(const GradientField& g, ComplexSpan z);

/// The canonical contact form alpha(v) = Re(v, 2 i z) = 2 sum (x dy - y dx)(v).
double alpha(ComplexSpan z, ComplexSpan v);
/// omega = d alpha = 4 sum dx ^ dy: omega(u, v) = 4 Im (v, u).
double omega(ComplexSpan u, ComplexSpan v);

/// pi'(v) = (v, w) w / ||w||^2 and pi = id - pi'.
ComplexVector project_normal(ComplexSpan v, ComplexSpan w);
ComplexVector project_tangent(ComplexSpan v, ComplexSpan w);

/// g = phi^* f together with f, for quantities that use both.
class LiftedFunction {
 public:
  LiftedFunction(const MixedPolynomial& f, const CoveringSpec& spec);

  const GradientField& base() const noexcept { return f_; }
  const GradientField& lifted() const noexcept { return g_; }
  const CoveringSpec& spec() const noexcept { return spec_; }

 private:
  CoveringSpec spec_;
  GradientField f_;
  GradientField g_;
};

struct ContactQuantities {
  double rho = 0.0;
  CCertificate c;
  ComplexVector reeb;
  ComplexVector theta_grad;
  double dtheta_R = 0.0;
  Complex g_value;
  ComplexVector v11, v12, v21, v22;
  // gamma = sum |f_{z_j}(phi(w))|^2 |w_j|^{2(a+b-1)},
  // beta = |sum conj(f_{z_j}(phi(w))) wbar_j^a w_j^b|^2 / ||w||^2;
  // present for holomorphic f and a homogeneous spec.
  std::optional<double> gamma;
  std::optional<double> beta;
  double correction = 0.0;  // ||v11||^2 - ||v21||^2
  // ||conj(grad_d g) - lambda w|| / ||grad_d g|| for the best lambda, and
  // the same for grad_dbar g.
  double parallel_residual_del = 0.0;
  double parallel_residual_delbar = 0.0;
};

/// All pointwise contact data of g at z (gamma, beta left empty).
ContactQuantities contact_quantities(const GradientField& g, ComplexSpan z);
/// As above with gamma and beta for a lift of a holomorphic f by a homogeneous spec.
ContactQuantities open_book_terms(const LiftedFunction& lift, ComplexSpan w);

struct ModifiedReeb {
  double direct = 0.0;   // Re(R_c, grad theta), R_c = k (R + S_c), S_c = pi(i c grad|g|^2 / 4)
  double formula = 0.0;  // k dtheta(R) + (c k / 2) correction / |g|^2
  double k = 1.0;        // e^{c |g|^2}
};

/// d theta(R_c) for the modified form alpha_c = e^{-c|g|^2} alpha; c >= 0.
ModifiedReeb modified_reeb_pairing(const GradientField& g, ComplexSpan z, double c);

struct WedgeCheck {
  double lhs = 0.0;  // top coefficient of d rho ^ alpha ^ omega^{n-2} ^ d Re g ^ d Im g
  double rhs = 0.0;  // 4^{n-1} (n-2)! C
  double c_total = 0.0;
  Eigen::MatrixXcd a_formula, a_extracted;  // A_{a,bbar} = 2 zbar_a z_b
  Eigen::MatrixXcd b_formula, b_extracted;  // B_{a,bbar} = (g_a conj(g_b) - conj(g_abar) g_bbar) / 2
};

/// Exterior-algebra check of the 2n-form identity; n must be 2 or 3.
WedgeCheck wedge_verify(const GradientField& g, ComplexSpan z);

}  // namespace mixlink
