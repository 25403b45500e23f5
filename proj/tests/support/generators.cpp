#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mixlink/geometry.hpp"

namespace mixlink::testing {

GaussianRational random_coefficient(Rng& rng) {
  for (;;) {
    const long re = rng.uniform_int(-9, 9);
    const long im = rng.uniform_int(-9, 9);
    if (re == 0 && im == 0) continue;
    return GaussianRational(mpq_class(re, static_cast<unsigned long>(rng.uniform_int(1, 4))),
                            mpq_class(im, static_cast<unsigned long>(rng.uniform_int(1, 4))));
  }
}

namespace {

void enumerate(std::size_t slots, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == slots) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.push_back(e);
    enumerate(slots, budget - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MixedPolynomial random_polar_homogeneous(Rng& rng, std::size_t n, int max_degree, std::size_t min_terms) {
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  enumerate(2 * n, max_degree, cur, exps);
  for (;;) {
    WeightVector q(n), p(n);
    for (auto& x : q) x = rng.uniform_int(1, 3);
    for (auto& x : p) x = rng.uniform_int(1, 3);
    std::map<std::pair<long, long>, std::vector<Monomial>> classes;
    for (const auto& e : exps) {
      Monomial m{ExponentVector(e.begin(), e.begin() + static_cast<long>(n)),
                 ExponentVector(e.begin() + static_cast<long>(n), e.end())};
      const long rd = radial_degree(m, q);
      const long pd = polar_degree(m, p);
      if (rd == 0 || pd == 0) continue;
      classes[{rd, pd}].push_back(std::move(m));
    }
    std::vector<const std::vector<Monomial>*> big;
    for (const auto& [key, v] : classes) {
      if (v.size() >= min_terms) big.push_back(&v);
    }
    if (big.empty()) continue;
    const auto& pick = *big[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(big.size()) - 1))];
    const std::size_t count = static_cast<std::size_t>(
        rng.uniform_int(static_cast<long>(min_terms), static_cast<long>(std::min<std::size_t>(pick.size(), 6))));
    std::vector<std::size_t> idx(pick.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<long>(i), static_cast<long>(idx.size()) - 1));
      std::swap(idx[i], idx[j]);
    }
    std::vector<MixedTerm> terms;
    for (std::size_t i = 0; i < count; ++i) terms.push_back({random_coefficient(rng), pick[idx[i]].nu, pick[idx[i]].mu});
    return MixedPolynomial(n, terms);
  }
}

MixedPolynomial random_convenient_holomorphic(Rng& rng, std::size_t n, int max_degree) {
  std::vector<MixedTerm> terms;
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector nu(n, 0), mu(n, 0);
    nu[j] = static_cast<int>(rng.uniform_int(2, max_degree));
    terms.push_back({random_coefficient(rng), nu, mu});
  }
  const long extra = rng.uniform_int(1, 3);
  for (long k = 0; k < extra; ++k) {
    ExponentVector nu(n, 0), mu(n, 0);
    for (auto& e : nu) e = static_cast<int>(rng.uniform_int(0, 2));
    if (std::all_of(nu.begin(), nu.end(), [](int e) { return e == 0; })) nu[0] = 1;
    terms.push_back({random_coefficient(rng), nu, mu});
  }
  return MixedPolynomial(n, terms);
}

MixedPolynomial random_mixed(Rng& rng, std::size_t n, std::size_t terms, int max_degree) {
  std::vector<MixedTerm> out;
  while (out.size() < terms) {
    ExponentVector nu(n, 0), mu(n, 0);
    int left = static_cast<int>(rng.uniform_int(1, max_degree));
    while (left > 0) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1));
      (rng.uniform() < 0.5 ? nu : mu)[j] += 1;
      --left;
    }
    out.push_back({random_coefficient(rng), nu, mu});
  }
  return MixedPolynomial(n, out);
}

ComplexVector random_sphere_point(Rng& rng, std::size_t n, double r, const WeightVector& a) {
  ComplexVector z(n);
  for (auto& x : z) x = rng.complex_normal();
  const double rho = a.empty() ? weighted_radius(z).value : weighted_radius(z, a).value;
  for (auto& x : z) x *= r / std::sqrt(rho);
  return z;
}

}  // namespace mixlink::testing
