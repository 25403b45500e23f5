#include <cmath>
#include <numeric>

#include "doctest.h"
#include "generators.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/numeric.hpp"
#include "mixlink/parser.hpp"

using namespace mixlink;

TEST_CASE("degrees of a term") {
  const MixedPolynomial p = parse_polynomial("w1^4*~w1^2", 2);
  const Monomial m = p.terms().begin()->first;
  CHECK(radial_degree(m, {1, 1}) == 6);
  CHECK(polar_degree(m, {1, 1}) == 2);
  const Monomial herm = parse_polynomial("z1*~z1", 2).terms().begin()->first;
  CHECK(polar_degree(herm, {5, 7}) == 0);
  CHECK_THROWS_AS(radial_degree(m, {1}), DimensionError);
}

TEST_CASE("weight detection examples") {
  const HomogeneityReport a = detect_weights(parse_polynomial("w1^4*~w1^2 + w2^4*~w2^2"));
  REQUIRE(a.radial);
  REQUIRE(a.polar);
  CHECK(a.radial->weights == WeightVector{1, 1});
  CHECK(a.radial->degree == 6);
  CHECK(a.polar->weights == WeightVector{1, 1});
  CHECK(a.polar->degree == 2);
  CHECK(a.strongly_polar);
  CHECK(a.strongly_polar_positive);

  const HomogeneityReport b = detect_weights(parse_polynomial("z1^3 + z2^2"));
  REQUIRE(b.radial);
  CHECK(b.radial->weights == WeightVector{2, 3});
  CHECK(b.radial->degree == 6);
  CHECK(b.polar->weights == WeightVector{2, 3});
  CHECK(b.strongly_polar_positive);

  CHECK_FALSE(detect_weights(parse_polynomial("z1 + z1*~z1")).radial);
  CHECK_THROWS_AS(detect_weights(MixedPolynomial(2)), DegenerateInputError);
}

TEST_CASE("polar degree zero is flagged") {
  const HomogeneityReport r = detect_weights(parse_polynomial("z1^2*~z1^2 + z2^2*~z2^2"));
  CHECK(r.radial);
  CHECK_FALSE(r.strongly_polar_positive);
  CHECK(r.polar_degree_zero);
}

TEST_CASE("non-unique weights are flagged") {
  const HomogeneityReport r = detect_weights(parse_polynomial("z1*z2"));
  REQUIRE(r.radial);
  CHECK_FALSE(r.radial->unique);
}

TEST_CASE("euler residuals") {
  const MixedPolynomial f = parse_polynomial("w1^4*~w1^2 + w2^4*~w2^2");
  const EulerResiduals e = euler_residuals(f, {1, 1}, 6, {1, 1}, 2);
  CHECK(e.all_zero());
  REQUIRE(e.strong_holo);
  REQUIRE(e.strong_anti);
  CHECK(euler_residuals(parse_polynomial("z1^3+z2^2"), {2, 3}, 6, {2, 3}, 6).all_zero());
  const EulerResiduals bad = euler_residuals(parse_polynomial("z1+z2^2"), {1, 1}, 1, {1, 1}, 1);
  CHECK(bad.radial == parse_polynomial("-z2^2", 2));
  const EulerResiduals odd = euler_residuals(parse_polynomial("z1^2*~z1"), {1}, 3, {1}, 2);
  CHECK(odd.non_integral_strong_degree);
}

TEST_CASE("detected weights satisfy the torus action identities") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const MixedPolynomial p = testing::random_polar_homogeneous(rng, 2 + t % 3);
    const HomogeneityReport h = detect_weights(p);
    REQUIRE(h.radial);
    REQUIRE(h.polar);
    long g = 0;
    for (long w : h.radial->weights) g = std::gcd(g, w);
    CHECK(g == 1);
    CHECK(euler_residuals(p, h.radial->weights, h.radial->degree, h.polar->weights, h.polar->degree).all_zero());
    for (int k = 0; k < 10; ++k) {
      ComplexVector z(p.dimension());
      for (auto& x : z) x = rng.complex_normal();
      const double r = rng.uniform(0.5, 2.0);
      const double eta = rng.uniform(0.0, 6.283185307179586);
      ComplexVector zr = z, ze = z;
      for (std::size_t j = 0; j < z.size(); ++j) {
        zr[j] *= std::pow(r, static_cast<double>(h.radial->weights[j]));
        ze[j] *= std::polar(1.0, eta * static_cast<double>(h.polar->weights[j]));
      }
      const Complex v = p.evaluate(z);
      CHECK(relative_error(p.evaluate(zr), std::pow(r, static_cast<double>(h.radial->degree)) * v) < 1e-9);
      CHECK(relative_error(p.evaluate(ze), std::polar(1.0, eta * static_cast<double>(h.polar->degree)) * v) < 1e-9);
    }
  }
}
