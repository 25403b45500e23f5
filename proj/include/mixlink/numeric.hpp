#pragma once

#include <cstddef>
#include <vector>

#include "mixlink/mixed_poly.hpp"

namespace mixlink {

/// Hermitian product (u, v) = sum u_j conj(v_j).
Complex hermitian(ComplexSpan u, ComplexSpan v);
/// ||u||^2.
double norm2(ComplexSpan u);
/// Euclidean real inner product of the realifications, Re(u, v).
inline double real_inner(ComplexSpan u, ComplexSpan v) { return hermitian(u, v).real(); }

/// Relative error |a - b| / max(|a|, |b|, floor).
double relative_error(double a, double b, double floor = 1e-30);
double relative_error(Complex a, Complex b, double floor = 1e-30);

/// A mixed polynomial with coefficients rounded to double precision, for
/// repeated evaluation.
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  explicit NumericPolynomial(const MixedPolynomial& p);

  std::size_t dimension() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex operator()(ComplexSpan z) const;
  /// sum |c| |z^nu zbar^mu|, the natural scale of the evaluation.
  double abs_sum(ComplexSpan z) const;

 private:
  struct Term {
    Complex coeff;
    std::vector<int> nu;
    std::vector<int> mu;
  };
  std::size_t n_ = 0;
  int max_exp_ = 0;
  std::vector<Term> terms_;
};

/// Value and Wirtinger gradients of g at a point:
/// del = (g_{z_1}, ..., g_{z_n}), delbar = (g_{zbar_1}, ..., g_{zbar_n}).
struct FieldValue {
  Complex value;
  ComplexVector del;
  ComplexVector delbar;
};

/// g together with its precompiled Wirtinger derivatives.
class GradientField {
 public:
  GradientField() = default;
  explicit GradientField(const MixedPolynomial& g);

  std::size_t dimension() const noexcept { return n_; }
  const MixedPolynomial& polynomial() const noexcept { return g_; }

  Complex value(ComplexSpan z) const { return f_(z); }
  FieldValue at(ComplexSpan z) const;
  /// sum_j (|g_{z_j}|_abs^2 + |g_{zbar_j}|_abs^2)^(1/2), using absolute-value
  /// evaluation of each derivative: a scale for gradient-sized quantities.
  double gradient_scale(ComplexSpan z) const;

 private:
  std::size_t n_ = 0;
  MixedPolynomial g_;
  NumericPolynomial f_;
  std::vector<NumericPolynomial> dz_;
  std::vector<NumericPolynomial> dzbar_;
};

/// Hermitian gradients of the real functions Re g, Im g and |g|^2, from the
/// Wirtinger gradients (grad h = 2 conj(dh/dz) for real h).
ComplexVector hermitian_gradient_re(const FieldValue& v);
ComplexVector hermitian_gradient_im(const FieldValue& v);
ComplexVector hermitian_gradient_abs2(const FieldValue& v);

}  // namespace mixlink
