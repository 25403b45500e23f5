#pragma once

#include <cstdint>
#include <string>

#include "mixlink/covering.hpp"
#include "mixlink/mixed_poly.hpp"

namespace mixlink {

struct IdentityResult {
  std::string name;
  std::size_t trials = 0;
  double max_error = 0.0;  // maximal relative error, 0 for exact checks
  double threshold = 0.0;
  bool exact = false;      // symbolic check
  bool passed = false;
  std::string detail;
};

/// Random point with independent standard complex normal coordinates.
ComplexVector random_point(std::size_t n, std::uint64_t seed, std::uint64_t index);

/// Symbolic Euler residuals with detected weights; throws UnsupportedError
/// when p is not polar weighted homogeneous.
IdentityResult check_euler(const MixedPolynomial& p);
/// Wirtinger derivatives and Re(v, grad h) for h = Re g, Im g against central
/// differences.
IdentityResult check_chain_rule(const MixedPolynomial& g, std::size_t trials, std::uint64_t seed,
                                double threshold = 1e-6);
/// c_certificate of the pull-back against the factored closed form.
IdentityResult check_c_factorization(const MixedPolynomial& f, const CoveringSpec& spec, std::size_t trials,
                                     std::uint64_t seed, double threshold = 1e-10);
/// Top-form coefficient against 4^{n-1}(n-2)! C, and the A and B matrices.
IdentityResult check_four_form(const MixedPolynomial& g, std::size_t trials, std::uint64_t seed,
                               double threshold = 1e-9);
/// ||v11||^2 = a^2|g|^2(gamma-beta), ||v21||^2 = b^2|g|^2(gamma-beta), and
/// the sign of the correction.
IdentityResult check_positivity(const MixedPolynomial& f, const CoveringSpec& spec, std::size_t trials,
                                std::uint64_t seed, double threshold = 1e-10);

}  // namespace mixlink
