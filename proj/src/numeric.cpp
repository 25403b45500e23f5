#include "mixlink/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "mixlink/errors.hpp"

namespace mixlink {

Complex hermitian(ComplexSpan u, ComplexSpan v) {
  Complex s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * std::conj(v[j]);
  return s;
}

double norm2(ComplexSpan u) {
  double s = 0.0;
  for (const auto& x : u) s += std::norm(x);
  return s;
}

double relative_error(double a, double b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

double relative_error(Complex a, Complex b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

NumericPolynomial::NumericPolynomial(const MixedPolynomial& p) : n_(p.dimension()) {
  terms_.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    terms_.push_back({c.to_complex(), m.nu, m.mu});
    for (std::size_t j = 0; j < n_; ++j) max_exp_ = std::max({max_exp_, m.nu[j], m.mu[j]});
  }
}

namespace {

// powers[j][k] = z_j^k, conj_powers[j][k] = conj(z_j)^k
struct PowerTable {
  std::vector<ComplexVector> pw;
  std::vector<ComplexVector> cpw;
  PowerTable(ComplexSpan z, int max_exp) : pw(z.size()), cpw(z.size()) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      pw[j].resize(static_cast<std::size_t>(max_exp) + 1);
      cpw[j].resize(static_cast<std::size_t>(max_exp) + 1);
      pw[j][0] = cpw[j][0] = 1.0;
      for (int k = 1; k <= max_exp; ++k) {
        pw[j][k] = pw[j][k - 1] * z[j];
        cpw[j][k] = cpw[j][k - 1] * std::conj(z[j]);
      }
    }
  }
};

}  // namespace

Complex NumericPolynomial::operator()(ComplexSpan z) const {
  if (z.size() != n_) throw DimensionError("point dimension mismatch");
  if (terms_.empty()) return 0.0;
  PowerTable t(z, max_exp_);
  Complex sum = 0.0;
  for (const auto& term : terms_) {
    Complex v = term.coeff;
    for (std::size_t j = 0; j < n_; ++j) v *= t.pw[j][term.nu[j]] * t.cpw[j][term.mu[j]];
    sum += v;
  }
  return sum;
}

double NumericPolynomial::abs_sum(ComplexSpan z) const {
  if (z.size() != n_) throw DimensionError("point dimension mismatch");
  double sum = 0.0;
  for (const auto& term : terms_) {
    double v = std::abs(term.coeff);
    for (std::size_t j = 0; j < n_; ++j) v *= std::pow(std::abs(z[j]), term.nu[j] + term.mu[j]);
    sum += v;
  }
  return sum;
}

GradientField::GradientField(const MixedPolynomial& g) : n_(g.dimension()), g_(g), f_(g) {
  dz_.reserve(n_);
  dzbar_.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    dz_.emplace_back(g.wirtinger_dz(j));
    dzbar_.emplace_back(g.wirtinger_dzbar(j));
  }
}

FieldValue GradientField::at(ComplexSpan z) const {
  FieldValue out{f_(z), ComplexVector(n_), ComplexVector(n_)};
  for (std::size_t j = 0; j < n_; ++j) {
    out.del[j] = dz_[j](z);
    out.delbar[j] = dzbar_[j](z);
  }
  return out;
}

double GradientField::gradient_scale(ComplexSpan z) const {
  double s = 0.0;
  for (std::size_t j = 0; j < n_; ++j) {
    const double a = dz_[j].abs_sum(z);
    const double b = dzbar_[j].abs_sum(z);
    s += a * a + b * b;
  }
  return std::sqrt(s);
}

ComplexVector hermitian_gradient_re(const FieldValue& v) {
  ComplexVector out(v.del.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::conj(v.del[j]) + v.delbar[j];
  return out;
}

ComplexVector hermitian_gradient_im(const FieldValue& v) {
  const Complex i(0.0, 1.0);
  ComplexVector out(v.del.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = i * (std::conj(v.del[j]) - v.delbar[j]);
  return out;
}

ComplexVector hermitian_gradient_abs2(const FieldValue& v) {
  ComplexVector out(v.del.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = 2.0 * v.value * std::conj(v.del[j]) + 2.0 * std::conj(v.value) * v.delbar[j];
  }
  return out;
}

}  // namespace mixlink
