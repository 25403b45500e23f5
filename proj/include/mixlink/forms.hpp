#pragma once

// Constant-coefficient differential forms on R^{2n} at a single point.
// Real coordinates are ordered x_1, y_1, ..., x_n, y_n (index 2j, 2j+1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixlink/mixed_poly.hpp"

namespace mixlink {

class Form {
 public:
  /// The zero k-form on R^{dim}; dim <= 16.
  Form(std::size_t dim, int degree);

  /// sum c_i dx_i.
  static Form one_form(std::span<const double> coeffs);
  /// The 1-form v -> Re(v, grad) of a real function with hermitian gradient grad.
  static Form differential(ComplexSpan grad);

  std::size_t dimension() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }

  /// Coefficient of dx_{i_1} ^ ... ^ dx_{i_k} for strictly increasing indices.
  double coefficient(std::span<const int> indices) const;
  double coefficient_mask(std::uint32_t mask) const { return coeffs_[mask]; }
  void add_term(std::span<const int> indices, double value);
  /// Coefficient of dx_1 ^ ... ^ dx_dim.
  double top_coefficient() const;

  Form operator+(const Form& o) const;
  Form operator*(double s) const;
  Form wedge(const Form& o) const;

  /// Value on k vectors of the complexified space C^{dim} (multilinear extension).
  Complex evaluate(std::span<const ComplexVector> vectors) const;

 private:
  std::size_t dim_;
  int degree_;
  std::vector<double> coeffs_;  // indexed by bitmask of coordinates
};

inline Form operator^(const Form& a, const Form& b) { return a.wedge(b); }

/// Realification (Re v_1, Im v_1, ...) of a complex tangent vector.
ComplexVector realify(ComplexSpan v);
/// d/dz_a = (d/dx_a - i d/dy_a) / 2 and d/dzbar_a as vectors of C^{2n}.
ComplexVector partial_z(std::size_t n, std::size_t a);
ComplexVector partial_zbar(std::size_t n, std::size_t a);

}  // namespace mixlink
