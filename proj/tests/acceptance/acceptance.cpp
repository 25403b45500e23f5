// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mixlink/covering.hpp"
#include "mixlink/geometry.hpp"
#include "mixlink/homogeneity.hpp"
#include "mixlink/identities.hpp"
#include "mixlink/link_certifier.hpp"
#include "mixlink/newton_boundary.hpp"
#include "mixlink/parser.hpp"

using namespace mixlink;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// 1. Symbolic Euler suite.
Outcome euler_suite() {
  const auto t0 = Clock::now();
  Rng rng(101);
  std::size_t zero = 0, total = 0, undetected = 0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const MixedPolynomial p = testing::random_polar_homogeneous(rng, n, 8, 2);
    const HomogeneityReport h = detect_weights(p);
    if (!h.radial || !h.polar) {
      ++undetected;
      continue;
    }
    const EulerResiduals e = euler_residuals(p, h.radial->weights, h.radial->degree, h.polar->weights, h.polar->degree);
    const MixedPolynomial* rs[] = {&e.radial, &e.polar, e.strong_holo ? &*e.strong_holo : nullptr,
                                   e.strong_anti ? &*e.strong_anti : nullptr};
    for (const auto* r : rs) {
      if (r == nullptr) continue;
      ++total;
      zero += r->is_zero();
    }
  }
  const double dt = seconds_since(t0);
  return {undetected == 0 && zero == total && dt < 2.0,
          "20 polynomials, " + std::to_string(zero) + "/" + std::to_string(total) +
              " residuals identically zero, " + std::to_string(undetected) + " undetected, " + fmt(dt) + " s"};
}

// 2. Reeb constant 2d(a-b) on off-link points.
Outcome reeb_constant(std::vector<std::string>& info) {
  const auto t0 = Clock::now();
  struct Case {
    int a, b, d;
  };
  const Case cases[] = {{2, 1, 2}, {3, 1, 3}, {2, 1, 3}};
  bool all = true;
  std::ostringstream os;
  Rng rng(202);
  for (const auto& c : cases) {
    const MixedPolynomial f = parse_polynomial("z1^" + std::to_string(c.d) + " + z2^" + std::to_string(c.d));
    const GradientField g(pullback(f, CoveringSpec::homogeneous(2, c.a, c.b)));
    const double expected = 2.0 * c.d * (c.a - c.b);
    for (double r : {0.5, 1.0, 2.0}) {
      double worst = 0.0, worst_closed = 0.0;
      double value = 0.0;
      std::size_t used = 0;
      while (used < 100) {
        const ComplexVector z = testing::random_sphere_point(rng, 2, r);
        if (std::abs(g.value(z)) < 1e-8 * std::pow(r, (c.a + c.b) * c.d)) continue;
        value = reeb_pairing(g, z);
        worst = std::max(worst, relative_error(value, expected));
        worst_closed = std::max(worst_closed, relative_error(value, c.d * (c.a - c.b) / (2.0 * r * r)));
        ++used;
      }
      const bool ok = worst < 1e-8;
      all = all && ok;
      os << " (" << c.a << "," << c.b << "," << c.d << ",r=" << r << "):" << (ok ? "ok" : "off");
      std::ostringstream line;
      line << "       (a,b,d)=(" << c.a << "," << c.b << "," << c.d << ") r=" << r << ": d theta(R)=" << value
           << ", target 2d(a-b)=" << expected << ", rel err " << fmt(worst)
           << "; against d(a-b)/(2r^2): rel err " << fmt(worst_closed);
      info.push_back(line.str());
    }
  }
  const double dt = seconds_since(t0);
  return {all && dt < 10.0, "900 off-link points;" + os.str() + ", " + fmt(dt) + " s"};
}

// 3. C factorization.
Outcome c_factorization() {
  Rng rng(303);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
    const MixedPolynomial f = testing::random_convenient_holomorphic(rng, n, 4);
    for (int a : {2, 3}) {
      const IdentityResult r = check_c_factorization(f, CoveringSpec::homogeneous(n, a, a - 1), 1000,
                                                     rng.next(), 1e-10);
      worst = std::max(worst, r.max_error);
    }
  }
  return {worst < 1e-10, "5 polynomials x specs (2,1),(3,2) x 1000 points, max rel err " + fmt(worst)};
}

// 4. Positivity identities.
Outcome positivity() {
  Rng rng(404);
  double worst = 0.0;
  bool signs = true;
  for (int k = 0; k < 5; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
    const MixedPolynomial f = testing::random_convenient_holomorphic(rng, n, 4);
    for (int a : {2, 3}) {
      const IdentityResult r = check_positivity(f, CoveringSpec::homogeneous(n, a, a - 1), 1000, rng.next(), 1e-10);
      worst = std::max(worst, r.max_error);
      signs = signs && r.detail.find("sign failures: 0") != std::string::npos;
    }
  }
  return {worst < 1e-10 && signs,
          "5 polynomials x specs (2,1),(3,2) x 1000 points, max rel err " + fmt(worst) +
              (signs ? ", correction >= 0 everywhere" : ", negative correction found")};
}

// 5. Wedge identity.
Outcome wedge() {
  Rng rng(505);
  double worst2 = 0.0, worst3 = 0.0, dt3 = 0.0;
  for (std::size_t n : {2u, 3u}) {
    const auto t0 = Clock::now();
    for (int k = 0; k < 5; ++k) {
      const MixedPolynomial g = testing::random_mixed(rng, n, 6, 4);
      const GradientField field(g);
      for (int t = 0; t < 100; ++t) {
        ComplexVector z(n);
        for (auto& x : z) x = rng.complex_normal();
        const WedgeCheck w = wedge_verify(field, z);
        (n == 2 ? worst2 : worst3) = std::max(n == 2 ? worst2 : worst3, relative_error(w.lhs, w.rhs));
      }
    }
    if (n == 3) dt3 = seconds_since(t0);
  }
  return {worst2 < 1e-9 && worst3 < 1e-9 && dt3 < 30.0,
          "n=2 max rel err " + fmt(worst2) + ", n=3 max rel err " + fmt(worst3) + " (" + fmt(dt3) + " s)"};
}

// 6. Transversality on the weighted sphere.
Outcome transversality() {
  const GradientField g(pullback(parse_polynomial("z1^2+z2^2"), CoveringSpec::homogeneous(2, 2, 1)));
  double worst = 1.0;
  std::size_t count = 0;
  for (double r : {0.5, 1.0, 2.0}) {
    SampleConfig cfg;
    cfg.radius = r;
    cfg.sphere_weights = {2, 3};
    cfg.n_samples = 200;
    cfg.seed = 606;
    const SampleSet set = sample_link(g, cfg);
    for (const auto& s : set.samples) worst = std::min(worst, s.jacobian_min_sv);
    count += set.samples.size();
  }
  return {count > 0 && worst > 1e-6,
          std::to_string(count) + " accepted samples on rho_(2,3) = r^2, min singular value " + fmt(worst)};
}

// 7. Sign certification.
Outcome signs() {
  bool all = true;
  std::ostringstream os;
  for (const char* f : {"z1^2+z2^2", "z1^3+z2^2"}) {
    for (int orient : {1, -1}) {
      const CoveringSpec spec = orient > 0 ? CoveringSpec::homogeneous(2, 2, 1) : CoveringSpec::homogeneous(2, 1, 2);
      const GradientField g(pullback(parse_polynomial(f), spec));
      SampleConfig cfg;
      cfg.radius = 1.0;
      cfg.n_samples = 200;
      cfg.seed = 707;
      const CertificationReport rep = certify_holomorphic_like(g, cfg, orient);
      const bool ok = rep.verdict == Verdict::CertifiedOnSamples && rep.samples >= 200;
      all = all && ok;
      os << " " << f << (orient > 0 ? " (2,1): C>0 on " : " (1,2): C<0 on ") << rep.samples << (ok ? "" : " FAIL")
         << ";";
    }
  }
  return {all, os.str()};
}

// 8. Derivative oracles.
Outcome derivatives() {
  Rng rng(808);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    const MixedPolynomial g = testing::random_mixed(rng, n, 5, 4);
    worst = std::max(worst, check_chain_rule(g, 1, rng.next()).max_error);
  }
  return {worst < 1e-6, "50 configurations, Wirtinger and Re(v, grad h) vs central differences, max rel err " +
                            fmt(worst)};
}

// 9. Pull-back weight arithmetic.
Outcome pullback_weights() {
  Rng rng(909);
  int matched = 0, tried = 0;
  while (tried < 10) {
    const std::size_t n = 2 + static_cast<std::size_t>(tried % 2);
    const MixedPolynomial f = testing::random_polar_homogeneous(rng, n, 6, 3);
    const HomogeneityReport h = detect_weights(f);
    if (!h.radial || !h.polar || !h.radial->unique || !h.polar->unique) continue;
    ++tried;
    std::vector<int> a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
      b[j] = static_cast<int>(rng.uniform_int(0, 2));
      a[j] = b[j] + static_cast<int>(rng.uniform_int(1, 2));
    }
    if (tried % 3 == 0) std::swap(a, b);
    const CoveringSpec spec(a, b);
    const TransformedWeights t =
        transform_weights(h.radial->weights, h.radial->degree, h.polar->weights, h.polar->degree, spec);
    const HomogeneityReport hg = detect_weights(pullback(f, spec));
    if (hg.radial && hg.polar && hg.radial->weights == t.radial && hg.radial->degree == t.m_r &&
        hg.polar->weights == t.polar && hg.polar->degree == t.m_p) {
      ++matched;
    }
  }
  return {matched == 10, std::to_string(matched) + "/10 pull-backs match the transformed weights exactly"};
}

// 10. Degeneracy probe sensitivity.
Outcome probe() {
  const NondegeneracyReport bad = nondegeneracy_probe(parse_polynomial("(z1+z2)^2"), 200);
  const NondegeneracyReport a1 = nondegeneracy_probe(parse_polynomial("z1^2+z2^2"), 200);
  const NondegeneracyReport cusp = nondegeneracy_probe(parse_polynomial("z1^3+z2^2"), 200);
  const bool ok = bad.witness_found && !a1.witness_found && a1.min_residual >= 0.1 && !cusp.witness_found &&
                  cusp.min_residual >= 0.1;
  return {ok, "(z1+z2)^2 witness " + std::string(bad.witness_found ? "found" : "missing") + " (residual " +
                  fmt(bad.min_residual) + "), z1^2+z2^2 min residual " + fmt(a1.min_residual) +
                  ", z1^3+z2^2 min residual " + fmt(cusp.min_residual)};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

// 11. Determinism of the CLI.
Outcome determinism() {
  const std::string cmd = std::string(MIXLINK_CLI_PATH) +
                          " certify -e 'z1^3+z2^2' --a 2 --b 1 --seed 42 --samples 50 --radius 0.5,1 --json";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  const bool ok = !a.empty() && a == b && s1 == s2;
  return {ok, "two runs of certify --seed 42: " + std::to_string(a.size()) + " bytes, " +
                  (a == b ? "byte-identical" : "different")};
}

}  // namespace

int main() {
  std::vector<std::string> info;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symbolic Euler suite", euler_suite},
      {"Reeb constant 2d(a-b)", [&] { return reeb_constant(info); }},
      {"C factorization", c_factorization},
      {"positivity identities", positivity},
      {"wedge identity", wedge},
      {"transversality on weighted sphere", transversality},
      {"sign certification", signs},
      {"derivative oracles", derivatives},
      {"pull-back weight arithmetic", pullback_weights},
      {"degeneracy probe sensitivity", probe},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " - "
              << o.detail << "\n";
    if (i == 1) {
      for (const auto& line : info) std::cout << line << "\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
