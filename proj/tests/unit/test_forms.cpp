#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "mixlink/forms.hpp"

using namespace mixlink;

TEST_CASE("wedge signs") {
  const std::vector<double> ex{1, 0, 0, 0}, ey{0, 1, 0, 0};
  const Form dx = Form::one_form(ex), dy = Form::one_form(ey);
  const int xy[2] = {0, 1};
  CHECK((dx ^ dy).coefficient(xy) == 1.0);
  CHECK((dy ^ dx).coefficient(xy) == -1.0);
  CHECK((dx ^ dx).coefficient(xy) == 0.0);
}

TEST_CASE("top form of four one-forms is a determinant") {
  const std::vector<std::vector<double>> rows{{1, 2, 0, 1}, {0, 1, 3, 0}, {2, 0, 1, 1}, {1, 1, 1, 2}};
  Form acc = Form::one_form(rows[0]);
  for (std::size_t k = 1; k < 4; ++k) acc = acc ^ Form::one_form(rows[k]);
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  CHECK(acc.top_coefficient() == doctest::Approx(m.determinant()).epsilon(1e-14));
}

TEST_CASE("evaluation of a two-form") {
  Form w(4, 2);
  const int i01[2] = {0, 1}, i23[2] = {2, 3};
  w.add_term(i01, 4.0);
  w.add_term(i23, 4.0);
  const ComplexVector u{1, 0, 0, 0}, v{0, 1, 0, 0};
  const ComplexVector uv[2] = {u, v};
  const ComplexVector vu[2] = {v, u};
  CHECK(w.evaluate(uv) == Complex(4.0));
  CHECK(w.evaluate(vu) == Complex(-4.0));
  const ComplexVector dz_dzbar[2] = {partial_z(2, 0), partial_zbar(2, 0)};
  // 4 dx ^ dy (d/dz, d/dzbar) = 4 (1/2 * i/2 - (-i/2) * 1/2) = 2i
  CHECK(std::abs(w.evaluate(dz_dzbar) - Complex(0, 2)) < 1e-15);
}
