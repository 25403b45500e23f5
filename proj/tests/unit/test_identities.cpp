#include "doctest.h"
#include "generators.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/identities.hpp"
#include "mixlink/parser.hpp"

using namespace mixlink;

TEST_CASE("identity checks pass on valid inputs") {
  CHECK(check_euler(parse_polynomial("w1^4*~w1^2 + w2^4*~w2^2")).passed);
  CHECK_THROWS_AS(check_euler(parse_polynomial("z1 + z1*~z1")), UnsupportedError);
  CHECK(check_chain_rule(parse_polynomial("z1^2*~z2 + 3*z2^3 - i*~z1"), 20, 1).passed);
  CHECK(check_four_form(parse_polynomial("z1^2+z2^2"), 100, 1).passed);
  CHECK(check_four_form(parse_polynomial("z1^2*~z2 + z3^3 + z1*~z3^2"), 20, 1).passed);
  const MixedPolynomial cusp = parse_polynomial("z1^3+z2^2");
  CHECK(check_c_factorization(cusp, CoveringSpec::homogeneous(2, 2, 1), 100, 1).passed);
  CHECK(check_positivity(cusp, CoveringSpec::homogeneous(2, 2, 1), 100, 1).passed);
  CHECK(check_positivity(cusp, CoveringSpec::homogeneous(2, 1, 2), 100, 1).passed);
}

TEST_CASE("random points are reproducible") {
  CHECK(random_point(3, 5, 7) == random_point(3, 5, 7));
  CHECK(random_point(3, 5, 7) != random_point(3, 5, 8));
}
