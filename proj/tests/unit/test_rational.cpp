#include "doctest.h"
#include "mixlink/rational.hpp"

using mixlink::GaussianRational;

TEST_CASE("gaussian rationals canonicalize and format") {
  CHECK(GaussianRational(mpq_class(2, 4)).to_string() == "1/2");
  CHECK(GaussianRational(3).to_string() == "3");
  CHECK(GaussianRational(mpq_class(-1, 2)).to_string() == "-1/2");
  CHECK(GaussianRational(mpq_class(1, 2), 1).to_string() == "(1/2+1i)");
  CHECK(GaussianRational(0, -2).to_string() == "(-2i)");
}

TEST_CASE("gaussian rational arithmetic is exact") {
  const GaussianRational i = GaussianRational::imaginary_unit();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational a(mpq_class(1, 3), mpq_class(2, 5));
  const GaussianRational b(mpq_class(-7, 2), 1);
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a * a.conj()).is_real());
  CHECK((a - a).is_zero());
  CHECK(GaussianRational(1).is_one());
}
