#pragma once

#include <cstdint>
#include <vector>

#include "mixlink/homogeneity.hpp"
#include "mixlink/mixed_poly.hpp"
#include "mixlink/random.hpp"

namespace mixlink::testing {

/// Random Gaussian rational with numerator in [-9, 9] and denominator in [1, 4], nonzero.
GaussianRational random_coefficient(Rng& rng);

/// Random polar weighted homogeneous polynomial: random weights Q, P, a
/// random nonempty (rdeg, pdeg) class of monomials with total degree <= max_degree
/// and pdeg != 0, and a random subset of at least `min_terms` of them.
MixedPolynomial random_polar_homogeneous(Rng& rng, std::size_t n, int max_degree = 8, std::size_t min_terms = 2);

/// Random convenient holomorphic polynomial: pure powers z_j^{e_j} plus a few cross terms.
MixedPolynomial random_convenient_holomorphic(Rng& rng, std::size_t n, int max_degree = 5);

/// Random mixed polynomial with `terms` monomials of total degree in [1, max_degree].
MixedPolynomial random_mixed(Rng& rng, std::size_t n, std::size_t terms = 5, int max_degree = 4);

/// Uniform point on the weighted sphere rho_a = r^2.
ComplexVector random_sphere_point(Rng& rng, std::size_t n, double r, const WeightVector& a = {});

}  // namespace mixlink::testing
