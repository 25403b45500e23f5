#include "mixlink/detail/gauss_newton.hpp"

#include <cmath>

namespace mixlink::detail {

namespace {

Eigen::VectorXd to_real(ComplexSpan z) {
  Eigen::VectorXd x(2 * static_cast<Eigen::Index>(z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) {
    x(2 * j) = z[j].real();
    x(2 * j + 1) = z[j].imag();
  }
  return x;
}

ComplexVector to_complex(const Eigen::VectorXd& x) {
  ComplexVector z(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = {x(2 * j), x(2 * j + 1)};
  return z;
}

}  // namespace

void set_real_gradient_row(Eigen::MatrixXd& J, Eigen::Index row, ComplexSpan grad) {
  for (std::size_t j = 0; j < grad.size(); ++j) {
    J(row, 2 * j) = grad[j].real();
    J(row, 2 * j + 1) = grad[j].imag();
  }
}

double min_singular_value_normalized(const Eigen::MatrixXd& J) {
  Eigen::MatrixXd Jn = J;
  for (Eigen::Index r = 0; r < Jn.rows(); ++r) {
    const double nr = Jn.row(r).norm();
    if (nr == 0.0) return 0.0;
    Jn.row(r) /= nr;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Jn);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

ProjectionResult project(ComplexVector z0, const ConstraintFn& fn, const ProjectionOptions& opt) {
  ProjectionResult res;
  res.z = std::move(z0);
  Eigen::VectorXd F;
  Eigen::MatrixXd J;
  fn(res.z, F, J);
  for (res.iterations = 0; res.iterations < opt.max_iter; ++res.iterations) {
    if (opt.converged(res.z, F)) {
      res.converged = true;
      break;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-14);
    const Eigen::VectorXd step = svd.solve(-F);
    const Eigen::VectorXd x = to_real(res.z);
    const double f0 = F.norm();
    double t = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30; ++k, t *= 0.5) {
      ComplexVector trial = to_complex(x + t * step);
      Eigen::VectorXd Ft;
      Eigen::MatrixXd Jt;
      fn(trial, Ft, Jt);
      if (Ft.allFinite() && Ft.norm() < f0) {
        res.z = std::move(trial);
        F = std::move(Ft);
        J = std::move(Jt);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    if (opt.admissible && !opt.admissible(res.z)) {
      res.residual = F;
      return res;
    }
  }
  if (!res.converged) res.converged = opt.converged(res.z, F);
  res.residual = F;
  return res;
}

}  // namespace mixlink::detail
