#include "mixlink/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "mixlink/errors.hpp"
#include "mixlink/forms.hpp"

namespace mixlink {

namespace {

Complex ipow(Complex x, int e) {
  Complex r = 1.0;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

void require_same_dimension(std::size_t n, ComplexSpan z) {
  if (z.size() != n) throw DimensionError("point has " + std::to_string(z.size()) + " coordinates, expected " + std::to_string(n));
}

}  // namespace

RadiusValue weighted_radius(ComplexSpan z, const WeightVector& a) {
  if (a.size() != z.size()) throw DimensionError("sphere weights do not match point dimension");
  RadiusValue r;
  r.gradient.resize(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (a[j] <= 0) throw std::invalid_argument("sphere weights must be positive");
    r.value += static_cast<double>(a[j]) * std::norm(z[j]);
    r.gradient[j] = 2.0 * static_cast<double>(a[j]) * z[j];
  }
  return r;
}

RadiusValue weighted_radius(ComplexSpan z) { return weighted_radius(z, WeightVector(z.size(), 1)); }

CCertificate c_certificate(const FieldValue& g, ComplexSpan z) {
  const std::size_t n = z.size();
  if (n < 2) throw DimensionError("C certificate needs n >= 2");
  if (g.del.size() != n) throw DimensionError("gradient does not match point dimension");
  CCertificate c;
  c.matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double pos = std::norm(std::conj(z[a]) * g.del[b] - std::conj(z[b]) * g.del[a]);
      const double neg = std::norm(z[a] * g.delbar[b] - z[b] * g.delbar[a]);
      c.matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = pos - neg;
      c.positive += pos;
      c.negative += neg;
    }
  }
  c.total = c.positive - c.negative;
  return c;
}

CCertificate c_certificate(const GradientField& g, ComplexSpan z) {
  require_same_dimension(g.dimension(), z);
  return c_certificate(g.at(z), z);
}

CCertificate c_certificate(const MixedPolynomial& g, ComplexSpan z) { return c_certificate(GradientField(g), z); }

Eigen::MatrixXd c_factored(const GradientField& f, const CoveringSpec& spec, ComplexSpan w) {
  const std::size_t n = w.size();
  require_same_dimension(f.dimension(), w);
  if (spec.dimension() != n) throw DimensionError("covering dimension does not match point");
  if (n < 2) throw DimensionError("C certificate needs n >= 2");
  if (!spec.is_homogeneous()) throw UnsupportedError("factored C needs a homogeneous covering");
  if (!f.polynomial().is_holomorphic()) throw UnsupportedError("factored C needs a holomorphic f");
  const int a = spec.a()[0];
  const int b = spec.b()[0];
  const ComplexVector z = spec.apply(w);
  const FieldValue fv = f.at(z);
  const auto& F = fv.del;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double v = 0.0;
      if (b == 0) {
        v = a * a * std::norm(std::conj(w[j]) * ipow(w[k], a - 1) * F[k] - std::conj(w[k]) * ipow(w[j], a - 1) * F[j]);
      } else if (a == 0) {
        v = -b * b *
            std::norm(w[j] * ipow(std::conj(w[k]), b - 1) * F[k] - w[k] * ipow(std::conj(w[j]), b - 1) * F[j]);
      } else {
        const Complex bracket = ipow(w[k], a - 1) * ipow(std::conj(w[k]), b - 1) * F[k] -
                                ipow(w[j], a - 1) * ipow(std::conj(w[j]), b - 1) * F[j];
        v = static_cast<double>(a * a - b * b) * std::norm(w[j] * w[k]) * std::norm(bracket);
      }
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v;
    }
  }
  return m;
}

ComplexVector theta_gradient(const FieldValue& g, double zero_tol) {
  if (std::abs(g.value) < zero_tol) throw OnZeroSetError("theta is undefined on the zero set of g");
  ComplexVector grad(g.del.size());
  const Complex i(0.0, 1.0);
  for (std::size_t j = 0; j < grad.size(); ++j) {
    grad[j] = i * (std::conj(g.del[j]) / std::conj(g.value) - g.delbar[j] / g.value);
  }
  return grad;
}

double dtheta(const FieldValue& g, ComplexSpan v, double zero_tol) {
  return real_inner(v, theta_gradient(g, zero_tol));
}

ComplexVector reeb_vector(ComplexSpan z) {
  const double rho = norm2(z);
  if (rho == 0.0) throw std::invalid_argument("Reeb vector is undefined at the origin");
  ComplexVector r(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) r[j] = Complex(0.0, 1.0) * z[j] / (2.0 * rho);
  return r;
}

double reeb_pairing(const GradientField& g, ComplexSpan z) {
  require_same_dimension(g.dimension(), z);
  return dtheta(g.at(z), reeb_vector(z));
}

double alpha(ComplexSpan z, ComplexSpan v) {
  ComplexVector iz2(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) iz2[j] = Complex(0.0, 2.0) * z[j];
  return real_inner(v, iz2);
}

double omega(ComplexSpan u, ComplexSpan v) { return 4.0 * hermitian(v, u).imag(); }

ComplexVector project_normal(ComplexSpan v, ComplexSpan w) {
  const double ww = norm2(w);
  if (ww == 0.0) throw std::invalid_argument("projection onto the zero vector");
  const Complex s = hermitian(v, w) / ww;
  ComplexVector r(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) r[j] = s * w[j];
  return r;
}

ComplexVector project_tangent(ComplexSpan v, ComplexSpan w) {
  ComplexVector r = project_normal(v, w);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = v[j] - r[j];
  return r;
}

LiftedFunction::LiftedFunction(const MixedPolynomial& f, const CoveringSpec& spec)
    : spec_(spec), f_(f), g_(pullback(f, spec)) {}

ContactQuantities contact_quantities(const GradientField& g, ComplexSpan z) {
  require_same_dimension(g.dimension(), z);
  const std::size_t n = z.size();
  const FieldValue v = g.at(z);
  ContactQuantities q;
  q.rho = norm2(z);
  q.g_value = v.value;
  q.c = n >= 2 ? c_certificate(v, z) : CCertificate{};
  q.reeb = reeb_vector(z);
  q.theta_grad = theta_gradient(v);
  q.dtheta_R = real_inner(q.reeb, q.theta_grad);

  ComplexVector conj_del(n), big1(n), big2(n);
  for (std::size_t j = 0; j < n; ++j) {
    conj_del[j] = std::conj(v.del[j]);
    big1[j] = v.value * conj_del[j];
    big2[j] = std::conj(v.value) * v.delbar[j];
  }
  q.v11 = project_tangent(big1, z);
  q.v12 = project_normal(big1, z);
  q.v21 = project_tangent(big2, z);
  q.v22 = project_normal(big2, z);
  q.correction = norm2(q.v11) - norm2(q.v21);

  const auto parallel = [&](const ComplexVector& u) {
    const double un = std::sqrt(norm2(u));
    return un == 0.0 ? 0.0 : std::sqrt(norm2(project_tangent(u, z))) / un;
  };
  q.parallel_residual_del = parallel(conj_del);
  q.parallel_residual_delbar = parallel(v.delbar);
  return q;
}

ContactQuantities open_book_terms(const LiftedFunction& lift, ComplexSpan w) {
  ContactQuantities q = contact_quantities(lift.lifted(), w);
  const CoveringSpec& spec = lift.spec();
  if (spec.is_homogeneous() && lift.base().polynomial().is_holomorphic()) {
    const int a = spec.a()[0];
    const int b = spec.b()[0];
    const FieldValue fv = lift.base().at(spec.apply(w));
    double gamma = 0.0;
    Complex s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      gamma += std::norm(fv.del[j]) * std::pow(std::norm(w[j]), a + b - 1);
      s += std::conj(fv.del[j]) * ipow(std::conj(w[j]), a) * ipow(w[j], b);
    }
    q.gamma = gamma;
    q.beta = std::norm(s) / norm2(w);
  }
  return q;
}

ModifiedReeb modified_reeb_pairing(const GradientField& g, ComplexSpan z, double c) {
  if (c < 0.0) throw std::invalid_argument("modification constant c must be non-negative");
  const ContactQuantities q = contact_quantities(g, z);
  const FieldValue v = g.at(z);
  const double g2 = std::norm(v.value);
  ModifiedReeb out;
  out.k = std::exp(c * g2);

  const ComplexVector grad_abs2 = hermitian_gradient_abs2(v);
  ComplexVector sc_raw(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) sc_raw[j] = Complex(0.0, c / 4.0) * grad_abs2[j];
  const ComplexVector sc = project_tangent(sc_raw, z);
  ComplexVector rc(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) rc[j] = out.k * (q.reeb[j] + sc[j]);
  out.direct = real_inner(rc, q.theta_grad);
  out.formula = out.k * q.dtheta_R + (c * out.k / 2.0) * q.correction / g2;
  return out;
}

WedgeCheck wedge_verify(const GradientField& g, ComplexSpan z) {
  const std::size_t n = z.size();
  require_same_dimension(g.dimension(), z);
  if (n != 2 && n != 3) throw UnsupportedError("wedge verification supports n = 2 and n = 3 only");
  const FieldValue v = g.at(z);
  const std::size_t dim = 2 * n;

  const Form drho = Form::differential(weighted_radius(z).gradient);
  ComplexVector iz2(n);
  for (std::size_t j = 0; j < n; ++j) iz2[j] = Complex(0.0, 2.0) * z[j];
  const Form alpha_form = Form::differential(iz2);
  Form om(dim, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const int idx[2] = {static_cast<int>(2 * j), static_cast<int>(2 * j + 1)};
    om.add_term(idx, 4.0);
  }
  const Form dre = Form::differential(hermitian_gradient_re(v));
  const Form dim_g = Form::differential(hermitian_gradient_im(v));

  Form acc = drho ^ alpha_form;
  const Form a2 = acc;
  for (std::size_t k = 0; k + 2 < n; ++k) acc = acc ^ om;
  const Form b2 = dre ^ dim_g;
  acc = acc ^ b2;

  WedgeCheck w;
  w.lhs = acc.top_coefficient();
  w.c_total = c_certificate(v, z).total;
  w.rhs = std::pow(4.0, static_cast<double>(n - 1)) * factorial(static_cast<int>(n) - 2) * w.c_total;

  const auto sz = static_cast<Eigen::Index>(n);
  w.a_formula.resize(sz, sz);
  w.a_extracted.resize(sz, sz);
  w.b_formula.resize(sz, sz);
  w.b_extracted.resize(sz, sz);
  const Complex minus_i(0.0, -1.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ComplexVector pair[2] = {partial_z(n, a), partial_zbar(n, b)};
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      w.a_formula(ia, ib) = 2.0 * std::conj(z[a]) * z[b];
      w.a_extracted(ia, ib) = minus_i * a2.evaluate(pair);
      w.b_formula(ia, ib) = 0.5 * (v.del[a] * std::conj(v.del[b]) - std::conj(v.delbar[a]) * v.delbar[b]);
      w.b_extracted(ia, ib) = minus_i * b2.evaluate(pair);
    }
  }
  return w;
}

}  // namespace mixlink
