#include "mixlink/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixlink/errors.hpp"
#include "mixlink/geometry.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/numeric.hpp"
#include "mixlink/random.hpp"

namespace mixlink {

namespace {

double matrix_error(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double diff = (a - b).cwiseAbs().maxCoeff();
  const double scale = std::max({a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(), 1e-300});
  return diff / scale;
}

double vector_error(ComplexSpan a, ComplexSpan b) {
  ComplexVector d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
  return std::sqrt(norm2(d)) / std::max({std::sqrt(norm2(a)), std::sqrt(norm2(b)), 1e-300});
}

IdentityResult finish(IdentityResult r) {
  r.passed = r.max_error < r.threshold || (r.exact && r.max_error == 0.0);
  return r;
}

}  // namespace

ComplexVector random_point(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::substream(seed, index);
  ComplexVector z(n);
  for (auto& x : z) x = rng.complex_normal();
  return z;
}

IdentityResult check_euler(const MixedPolynomial& p) {
  const HomogeneityReport h = detect_weights(p);
  if (!h.radial || !h.polar) throw UnsupportedError("euler: input is not polar weighted homogeneous");
  const EulerResiduals res =
      euler_residuals(p, h.radial->weights, h.radial->degree, h.polar->weights, h.polar->degree);
  IdentityResult r;
  r.name = "euler";
  r.trials = 1;
  r.exact = true;
  r.threshold = 0.0;
  std::size_t nonzero = 0;
  std::size_t checked = 2;
  nonzero += !res.radial.is_zero();
  nonzero += !res.polar.is_zero();
  if (res.strong_holo) {
    ++checked;
    nonzero += !res.strong_holo->is_zero();
  }
  if (res.strong_anti) {
    ++checked;
    nonzero += !res.strong_anti->is_zero();
  }
  r.max_error = nonzero == 0 ? 0.0 : 1.0;
  std::ostringstream os;
  os << checked << " residuals checked symbolically, " << nonzero << " nonzero";
  if (res.non_integral_strong_degree) os << "; (m_r +- m_p)/2 is not an integer";
  r.detail = os.str();
  r.passed = nonzero == 0;
  return r;
}

IdentityResult check_chain_rule(const MixedPolynomial& g, std::size_t trials, std::uint64_t seed, double threshold) {
  const std::size_t n = g.dimension();
  const GradientField field(g);
  IdentityResult r;
  r.name = "chainrule";
  r.trials = trials;
  r.threshold = threshold;
  const double h = 1e-5;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector z = random_point(n, seed, 2 * t);
    const ComplexVector v = random_point(n, seed, 2 * t + 1);
    const FieldValue fv = field.at(z);

    // Wirtinger derivatives from central differences in x_j and y_j.
    ComplexVector fd(2 * n), exact(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      ComplexVector zp = z, zm = z;
      zp[j] += h;
      zm[j] -= h;
      const Complex dx = (field.value(zp) - field.value(zm)) / (2 * h);
      zp = z;
      zm = z;
      zp[j] += Complex(0, h);
      zm[j] -= Complex(0, h);
      const Complex dy = (field.value(zp) - field.value(zm)) / (2 * h);
      fd[j] = 0.5 * (dx - Complex(0, 1) * dy);
      fd[n + j] = 0.5 * (dx + Complex(0, 1) * dy);
      exact[j] = fv.del[j];
      exact[n + j] = fv.delbar[j];
    }
    r.max_error = std::max(r.max_error, vector_error(fd, exact));

    // Directional derivatives of Re g and Im g along v.
    ComplexVector zp = z, zm = z;
    for (std::size_t j = 0; j < n; ++j) {
      zp[j] += h * v[j];
      zm[j] -= h * v[j];
    }
    const Complex dv = (field.value(zp) - field.value(zm)) / (2 * h);
    const Complex pred(real_inner(v, hermitian_gradient_re(fv)), real_inner(v, hermitian_gradient_im(fv)));
    r.max_error = std::max(r.max_error, relative_error(dv, pred));
  }
  r.detail = "Wirtinger gradient and Re(v, grad h) for h = Re g, Im g against central differences";
  return finish(r);
}

IdentityResult check_c_factorization(const MixedPolynomial& f, const CoveringSpec& spec, std::size_t trials,
                                     std::uint64_t seed, double threshold) {
  const LiftedFunction lift(f, spec);
  const std::size_t n = f.dimension();
  IdentityResult r;
  r.name = "cab";
  r.trials = trials;
  r.threshold = threshold;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector w = random_point(n, seed, t);
    const CCertificate c = c_certificate(lift.lifted(), w);
    const Eigen::MatrixXd m = c_factored(lift.base(), spec, w);
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
      for (Eigen::Index k = j + 1; k < m.cols(); ++k) {
        r.max_error = std::max(r.max_error, relative_error(c.matrix(j, k), m(j, k), 1e-300));
      }
    }
  }
  r.detail = "C_{j,k} of the pull-back against the factored form with |.|^2";
  return finish(r);
}

IdentityResult check_four_form(const MixedPolynomial& g, std::size_t trials, std::uint64_t seed, double threshold) {
  const GradientField field(g);
  IdentityResult r;
  r.name = "fourform";
  r.trials = trials;
  r.threshold = threshold;
  double top = 0.0, am = 0.0, bm = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector z = random_point(g.dimension(), seed, t);
    const WedgeCheck w = wedge_verify(field, z);
    top = std::max(top, relative_error(w.lhs, w.rhs, 1e-300));
    am = std::max(am, matrix_error(w.a_formula, w.a_extracted));
    bm = std::max(bm, matrix_error(w.b_formula, w.b_extracted));
  }
  r.max_error = std::max({top, am, bm});
  std::ostringstream os;
  os << "top form " << top << ", A matrix " << am << ", B matrix " << bm;
  r.detail = os.str();
  return finish(r);
}

IdentityResult check_positivity(const MixedPolynomial& f, const CoveringSpec& spec, std::size_t trials,
                                std::uint64_t seed, double threshold) {
  if (!spec.is_homogeneous()) throw UnsupportedError("positivity: needs a homogeneous covering");
  if (!f.is_holomorphic()) throw UnsupportedError("positivity: needs a holomorphic f");
  const LiftedFunction lift(f, spec);
  const double a = spec.a()[0];
  const double b = spec.b()[0];
  IdentityResult r;
  r.name = "positivity";
  r.trials = trials;
  r.threshold = threshold;
  std::size_t sign_failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector w = random_point(f.dimension(), seed, t);
    const ContactQuantities q = open_book_terms(lift, w);
    const double g2 = std::norm(q.g_value);
    const double gb = *q.gamma - *q.beta;
    r.max_error = std::max(r.max_error, relative_error(norm2(q.v11), a * a * g2 * gb, 1e-300));
    r.max_error = std::max(r.max_error, relative_error(norm2(q.v21), b * b * g2 * gb, 1e-300));
    const double scale = norm2(q.v11) + norm2(q.v21);
    if (spec.orientation() * q.correction < -threshold * scale) ++sign_failures;
  }
  std::ostringstream os;
  os << "||v11||^2 and ||v21||^2 against a^2|g|^2(gamma-beta), b^2|g|^2(gamma-beta); correction sign failures: "
     << sign_failures;
  r.detail = os.str();
  r = finish(r);
  r.passed = r.passed && sign_failures == 0;
  return r;
}

}  // namespace mixlink
