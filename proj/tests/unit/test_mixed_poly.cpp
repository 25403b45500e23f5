#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/mixed_poly.hpp"
#include "mixlink/numeric.hpp"
#include "mixlink/parser.hpp"

using namespace mixlink;

TEST_CASE("terms merge and cancel") {
  const MixedTerm ts[] = {{GaussianRational(2), {1, 0}, {0, 0}},
                          {GaussianRational(-2), {1, 0}, {0, 0}},
                          {GaussianRational(3), {0, 1}, {1, 0}}};
  const MixedPolynomial p(2, ts);
  CHECK(p.size() == 1);
  CHECK(p.coefficient({{0, 1}, {1, 0}}) == GaussianRational(3));
}

TEST_CASE("wirtinger derivatives of a monomial") {
  const MixedPolynomial p = parse_polynomial("z1^4*~z1^2 + z2^4*~z2^2");
  CHECK(p.wirtinger_dz(0) == parse_polynomial("4*z1^3*~z1^2", 2));
  CHECK(p.wirtinger_dzbar(1) == parse_polynomial("2*z2^4*~z2", 2));
  CHECK(parse_polynomial("z1^3+z2^2").wirtinger_dzbar(0).is_zero());
  CHECK_THROWS_AS(p.wirtinger_dz(2), std::out_of_range);
}

TEST_CASE("conjugation and real parts") {
  const MixedPolynomial p = parse_polynomial("(1+2i)*z1^2*~z2 + 3*z2");
  CHECK(p.conjugate().conjugate() == p);
  CHECK(p.real_part().is_real_valued());
  CHECK(p.imag_part().is_real_valued());
  CHECK(p.real_part() + GaussianRational::imaginary_unit() * p.imag_part() == p);
  const ComplexVector z{{0.3, -0.7}, {1.1, 0.4}};
  CHECK(std::abs(p.conjugate().evaluate(z) - std::conj(p.evaluate(z))) < 1e-13);
}

TEST_CASE("evaluation matches the compiled evaluator") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const MixedPolynomial p = testing::random_mixed(rng, 3, 6, 5);
    const NumericPolynomial np(p);
    ComplexVector z(3);
    for (auto& x : z) x = rng.complex_normal();
    CHECK(relative_error(p.evaluate(z), np(z)) < 1e-12);
  }
  CHECK_THROWS_AS(parse_polynomial("z1").evaluate(ComplexVector(2)), DimensionError);
}

TEST_CASE("wirtinger derivatives against central differences") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const MixedPolynomial p = testing::random_mixed(rng, 2, 5, 4);
    const GradientField g(p);
    ComplexVector z(2);
    for (auto& x : z) x = rng.complex_normal();
    const FieldValue v = g.at(z);
    const double h = 1e-5;
    for (std::size_t j = 0; j < 2; ++j) {
      ComplexVector a = z, b = z;
      a[j] += h;
      b[j] -= h;
      const Complex dx = (p.evaluate(a) - p.evaluate(b)) / (2 * h);
      a = z;
      b = z;
      a[j] += Complex(0, h);
      b[j] -= Complex(0, h);
      const Complex dy = (p.evaluate(a) - p.evaluate(b)) / (2 * h);
      const double scale = std::abs(v.del[j]) + std::abs(v.delbar[j]) + 1e-3;
      CHECK(std::abs(0.5 * (dx - Complex(0, 1) * dy) - v.del[j]) / scale < 1e-7);
      CHECK(std::abs(0.5 * (dx + Complex(0, 1) * dy) - v.delbar[j]) / scale < 1e-7);
    }
  }
}

TEST_CASE("hermitian gradient of a real function is twice the conjugate of d/dz") {
  const MixedPolynomial h = parse_polynomial("z1*~z1*z2*~z2 + 2*z1*~z1");
  REQUIRE(h.is_real_valued());
  const GradientField g(h);
  const ComplexVector z{{0.4, 0.2}, {-0.3, 0.9}};
  const FieldValue v = g.at(z);
  const ComplexVector grad = hermitian_gradient_re(v);
  for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(grad[j] - 2.0 * std::conj(v.del[j])) < 1e-14);
  for (const auto& x : hermitian_gradient_im(v)) CHECK(std::abs(x) < 1e-14);
}

TEST_CASE("serialization round trips") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const MixedPolynomial p = testing::random_mixed(rng, 3, 5, 4);
    CHECK(parse_polynomial(p.to_string(), 3) == p);
    CHECK(parse_polynomial(p.to_string('w'), 3) == p);
  }
  CHECK(parse_polynomial("z1^2+z2^2").pow(1) == parse_polynomial("z2^2 + z1^2"));
}
