#include "mixlink/forms.hpp"

#include <bit>
#include <stdexcept>

#include <Eigen/Dense>

#include "mixlink/errors.hpp"

namespace mixlink {

namespace {

std::uint32_t mask_of(std::span<const int> indices, std::size_t dim) {
  std::uint32_t m = 0;
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i < 0 || static_cast<std::size_t>(i) >= dim) {
      throw std::invalid_argument("form indices must be strictly increasing and in range");
    }
    m |= 1u << i;
    prev = i;
  }
  return m;
}

// Sign of the permutation sorting the concatenation (A, B) of two disjoint
// increasing index sets.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    swaps += std::popcount(a >> (j + 1));
    b &= b - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

Form::Form(std::size_t dim, int degree) : dim_(dim), degree_(degree) {
  if (dim > 16) throw UnsupportedError("forms support at most 16 real dimensions");
  if (degree < 0 || static_cast<std::size_t>(degree) > dim) throw std::invalid_argument("form degree out of range");
  coeffs_.assign(std::size_t{1} << dim, 0.0);
}

Form Form::one_form(std::span<const double> coeffs) {
  Form f(coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.coeffs_[std::size_t{1} << i] = coeffs[i];
  return f;
}

Form Form::differential(ComplexSpan grad) {
  std::vector<double> c(2 * grad.size());
  for (std::size_t j = 0; j < grad.size(); ++j) {
    c[2 * j] = grad[j].real();
    c[2 * j + 1] = grad[j].imag();
  }
  return one_form(c);
}

double Form::coefficient(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("index count differs from form degree");
  return coeffs_[mask_of(indices, dim_)];
}

void Form::add_term(std::span<const int> indices, double value) {
  if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("index count differs from form degree");
  coeffs_[mask_of(indices, dim_)] += value;
}

double Form::top_coefficient() const {
  if (static_cast<std::size_t>(degree_) != dim_) return 0.0;
  return coeffs_.back();
}

Form Form::operator+(const Form& o) const {
  if (o.dim_ != dim_ || o.degree_ != degree_) throw std::invalid_argument("adding forms of different shape");
  Form r = *this;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) r.coeffs_[m] += o.coeffs_[m];
  return r;
}

Form Form::operator*(double s) const {
  Form r = *this;
  for (double& c : r.coeffs_) c *= s;
  return r;
}

Form Form::wedge(const Form& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("wedge of forms on different spaces");
  if (static_cast<std::size_t>(degree_ + o.degree_) > dim_) return Form(dim_, 0) * 0.0;
  Form r(dim_, degree_ + o.degree_);
  for (std::uint32_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0.0 || std::popcount(a) != degree_) continue;
    for (std::uint32_t b = 0; b < o.coeffs_.size(); ++b) {
      if (o.coeffs_[b] == 0.0 || (a & b) != 0 || std::popcount(b) != o.degree_) continue;
      r.coeffs_[a | b] += merge_sign(a, b) * coeffs_[a] * o.coeffs_[b];
    }
  }
  return r;
}

Complex Form::evaluate(std::span<const ComplexVector> vectors) const {
  const auto k = static_cast<std::size_t>(degree_);
  if (vectors.size() != k) throw std::invalid_argument("form evaluated on wrong number of vectors");
  for (const auto& v : vectors) {
    if (v.size() != dim_) throw DimensionError("vector dimension differs from form dimension");
  }
  if (k == 0) return coeffs_[0];
  Complex total = 0.0;
  Eigen::MatrixXcd m(k, k);
  for (std::uint32_t mask = 0; mask < coeffs_.size(); ++mask) {
    if (coeffs_[mask] == 0.0 || std::popcount(mask) != degree_) continue;
    std::size_t row = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1, ++row) {
      const int i = std::countr_zero(bits);
      for (std::size_t c = 0; c < k; ++c) m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = vectors[c][i];
    }
    total += coeffs_[mask] * m.determinant();
  }
  return total;
}

ComplexVector realify(ComplexSpan v) {
  ComplexVector r(2 * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    r[2 * j] = v[j].real();
    r[2 * j + 1] = v[j].imag();
  }
  return r;
}

ComplexVector partial_z(std::size_t n, std::size_t a) {
  ComplexVector e(2 * n);
  e.at(2 * a) = 0.5;
  e.at(2 * a + 1) = Complex(0.0, -0.5);
  return e;
}

ComplexVector partial_zbar(std::size_t n, std::size_t a) {
  ComplexVector e(2 * n);
  e.at(2 * a) = 0.5;
  e.at(2 * a + 1) = Complex(0.0, 0.5);
  return e;
}

}  // namespace mixlink
