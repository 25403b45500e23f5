#include "mixlink/newton_boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "mixlink/detail/exact_linalg.hpp"
#include "mixlink/detail/gauss_newton.hpp"
#include "mixlink/errors.hpp"
#include "mixlink/numeric.hpp"
#include "mixlink/random.hpp"

namespace mixlink {

std::string to_string(FaceType t) {
  switch (t) {
    case FaceType::StronglyPolarPositive:
      return "strongly_polar_positive";
    case FaceType::PolarPositive:
      return "polar_positive";
    case FaceType::Neither:
      return "neither";
  }
  return "neither";
}

std::vector<SupportPoint> radial_support(const MixedPolynomial& p) {
  std::map<ExponentVector, std::vector<Monomial>> pts;
  for (const auto& [m, c] : p.terms()) {
    ExponentVector s(m.nu.size());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = m.nu[j] + m.mu[j];
    pts[s].push_back(m);
  }
  std::vector<SupportPoint> out;
  out.reserve(pts.size());
  for (auto& [pt, w] : pts) out.push_back({pt, std::move(w)});
  return out;
}

namespace {

void require_positive(const WeightVector& w, std::size_t n) {
  if (w.size() != n) throw DimensionError("weight vector length does not match dimension");
  for (long x : w) {
    if (x <= 0) throw std::invalid_argument("face weights must be strictly positive");
  }
}

long dot(const WeightVector& w, const ExponentVector& v) {
  long s = 0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * v[j];
  return s;
}

// Determinant of a small integer matrix (Laplace expansion; k <= ~6).
long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  long long s = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (cc != c) minor[r - 1].push_back(m[r][cc]);
      }
    }
    const long long term = m[0][c] * det(minor);
    s += (c % 2 == 0) ? term : -term;
  }
  return s;
}

// Generalized cross product of n-1 integer rows in Z^n: orthogonal to all rows,
// zero iff the rows are dependent.
std::vector<long long> cofactor_normal(const std::vector<std::vector<long long>>& rows, std::size_t n) {
  std::vector<long long> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<long long>> minor(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != k) minor[r].push_back(rows[r][c]);
      }
    }
    const long long d = det(minor);
    out[k] = (k % 2 == 0) ? d : -d;
  }
  return out;
}

std::size_t affine_dimension(const std::vector<ExponentVector>& pts) {
  if (pts.size() <= 1) return 0;
  detail::RationalMatrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    detail::RationalVector r(pts[i].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  return detail::rank(rows, pts[0].size());
}

// Polar P-degree of every term when equal, else nullopt.
std::optional<long> common_polar_degree(const MixedPolynomial& f, const WeightVector& w) {
  std::optional<long> d;
  for (const auto& [m, c] : f.terms()) {
    const long x = polar_degree(m, w);
    if (d && *d != x) return std::nullopt;
    d = x;
  }
  return d;
}

FaceType classify_polynomial(const MixedPolynomial& face, const WeightVector& normal,
                             std::optional<WeightedDegree>* witness) {
  if (auto d = common_polar_degree(face, normal); d && *d > 0) {
    if (witness) *witness = WeightedDegree{normal, *d, true};
    return FaceType::StronglyPolarPositive;
  }
  if (auto w = find_positive_polar_weights(face)) {
    if (witness) *witness = *w;
    return FaceType::PolarPositive;
  }
  return FaceType::Neither;
}

int rank_of(FaceType t) {
  switch (t) {
    case FaceType::StronglyPolarPositive:
      return 2;
    case FaceType::PolarPositive:
      return 1;
    case FaceType::Neither:
      return 0;
  }
  return 0;
}

}  // namespace

MixedPolynomial face_function(const MixedPolynomial& p, const WeightVector& weights) {
  if (p.is_zero()) throw DegenerateInputError("face function of the zero polynomial");
  require_positive(weights, p.dimension());
  long best = std::numeric_limits<long>::max();
  for (const auto& [m, c] : p.terms()) best = std::min(best, radial_degree(m, weights));
  std::vector<MixedTerm> kept;
  for (const auto& [m, c] : p.terms()) {
    if (radial_degree(m, weights) == best) kept.push_back({c, m.nu, m.mu});
  }
  return MixedPolynomial(p.dimension(), kept);
}

ConvenienceReport is_convenient(const MixedPolynomial& p) {
  const std::size_t n = p.dimension();
  ConvenienceReport rep;
  for (std::size_t j = 0; j < n; ++j) {
    bool found = false;
    for (const auto& [m, c] : p.terms()) {
      bool only_j = m.nu[j] + m.mu[j] > 0;
      for (std::size_t k = 0; k < n && only_j; ++k) {
        if (k != j && m.nu[k] + m.mu[k] != 0) only_j = false;
      }
      if (only_j) {
        rep.witnesses.emplace_back(j, m);
        found = true;
        break;
      }
    }
    if (!found) rep.missing_axes.push_back(j);
  }
  rep.convenient = rep.missing_axes.empty() && n > 0;
  return rep;
}

NotConvenientError::NotConvenientError(std::vector<std::size_t> missing_axes)
    : Error([&] {
        std::string s = "not convenient: axes";
        for (std::size_t i = 0; i < missing_axes.size(); ++i) {
          s += (i == 0 ? " " : ",") + std::to_string(missing_axes[i] + 1);
        }
        return s + " missing";
      }()),
      missing_(std::move(missing_axes)) {}

std::vector<Face> top_faces(const MixedPolynomial& p) {
  if (p.is_zero()) throw DegenerateInputError("Newton boundary of the zero polynomial");
  const auto conv = is_convenient(p);
  if (!conv.convenient) throw NotConvenientError(conv.missing_axes);
  const std::size_t n = p.dimension();
  const auto support = radial_support(p);
  std::vector<ExponentVector> pts;
  for (const auto& s : support) pts.push_back(s.point);

  std::set<WeightVector> normals;
  if (n == 1) {
    normals.insert(WeightVector{1});
  } else if (pts.size() >= n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
      std::vector<std::vector<long long>> rows;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<long long> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = pts[idx[r]][c] - pts[idx[0]][c];
        rows.push_back(std::move(row));
      }
      auto nv = cofactor_normal(rows, n);
      const bool all_pos = std::all_of(nv.begin(), nv.end(), [](long long x) { return x > 0; });
      const bool all_neg = std::all_of(nv.begin(), nv.end(), [](long long x) { return x < 0; });
      if (all_pos || all_neg) {
        WeightVector w;
        long g = 0;
        for (auto x : nv) {
          w.push_back(static_cast<long>(all_neg ? -x : x));
          g = std::gcd(g, w.back());
        }
        for (auto& x : w) x /= g;
        // Keep only supporting hyperplanes: the chosen points attain the minimum.
        const long on = dot(w, pts[idx[0]]);
        const bool supporting = std::all_of(pts.begin(), pts.end(), [&](const ExponentVector& v) { return dot(w, v) >= on; });
        if (supporting) normals.insert(std::move(w));
      }
      // next combination
      std::size_t i = n;
      while (i > 0 && idx[i - 1] == pts.size() - n + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t k = i; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
  }

  std::vector<Face> faces;
  for (const auto& w : normals) {
    long best = std::numeric_limits<long>::max();
    for (const auto& v : pts) best = std::min(best, dot(w, v));
    std::vector<ExponentVector> on_face;
    for (const auto& v : pts) {
      if (dot(w, v) == best) on_face.push_back(v);
    }
    const std::size_t dim = affine_dimension(on_face);
    if (dim + 1 != n) continue;
    Face f;
    f.normal = w;
    f.dimension = dim;
    f.radial_degree = best;
    f.face_poly = face_function(p, w);
    faces.push_back(std::move(f));
  }
  return faces;
}

NewtonBoundaryReport classify_face_type(const MixedPolynomial& p, std::size_t subface_samples, std::uint64_t seed) {
  NewtonBoundaryReport rep;
  rep.top_faces = top_faces(p);
  rep.convenient = true;
  rep.overall = FaceType::StronglyPolarPositive;
  for (auto& f : rep.top_faces) {
    f.classification = classify_polynomial(f.face_poly, f.normal, &f.polar_witness);
    if (rank_of(f.classification) < rank_of(rep.overall)) rep.overall = f.classification;
  }
  if (rep.top_faces.empty()) rep.overall = FaceType::Neither;

  Rng rng = Rng::substream(seed, 0x5bf);
  for (std::size_t s = 0; s < subface_samples; ++s) {
    WeightVector w(p.dimension());
    for (auto& x : w) x = rng.uniform_int(1, 12);
    const MixedPolynomial face = face_function(p, w);
    SubfaceCheck chk{w, classify_polynomial(face, w, nullptr), true};
    if (rep.overall == FaceType::StronglyPolarPositive) {
      auto d = common_polar_degree(face, w);
      chk.consistent = d && *d > 0;
    } else if (rep.overall == FaceType::PolarPositive) {
      chk.consistent = detect_weights(face).polar.has_value();
    }
    rep.subface_property_holds = rep.subface_property_holds && chk.consistent;
    rep.subface_checks.push_back(std::move(chk));
  }
  return rep;
}

double criticality_residual(const MixedPolynomial& f, ComplexSpan z) {
  const GradientField field(f);
  const FieldValue v = field.at(z);
  ComplexVector u(v.del.size());
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = std::conj(v.del[j]);
  const double num2 = std::max(0.0, norm2(u) + norm2(v.delbar) - 2.0 * std::abs(hermitian(u, v.delbar)));
  const double scale = field.gradient_scale(z);
  return scale > 0.0 ? std::sqrt(num2) / scale : 0.0;
}

NondegeneracyReport nondegeneracy_probe(const MixedPolynomial& p, std::size_t trials, double tol, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("nondegeneracy_probe needs at least one trial");
  NondegeneracyReport rep;
  rep.trials = trials;
  rep.tol = tol;
  const auto faces = top_faces(p);
  const std::size_t n = p.dimension();
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const MixedPolynomial& fp = faces[fi].face_poly;
    const GradientField field(fp);
    const NumericPolynomial num(fp);
    FaceProbe probe;
    probe.normal = faces[fi].normal;

    const detail::ConstraintFn constraints = [&](ComplexSpan z, Eigen::VectorXd& F, Eigen::MatrixXd& J) {
      const FieldValue v = field.at(z);
      F.resize(2);
      J.resize(2, 2 * static_cast<Eigen::Index>(n));
      F << v.value.real(), v.value.imag();
      detail::set_real_gradient_row(J, 0, hermitian_gradient_re(v));
      detail::set_real_gradient_row(J, 1, hermitian_gradient_im(v));
    };
    detail::ProjectionOptions opt;
    opt.max_iter = 200;
    opt.converged = [&](ComplexSpan z, const Eigen::VectorXd& F) { return F.norm() <= 1e-15 * num.abs_sum(z); };
    opt.admissible = [](ComplexSpan z) {
      return std::all_of(z.begin(), z.end(), [](const Complex& x) { return std::abs(x) > 1e-8; });
    };

    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = Rng::substream(seed, fi * trials + t);
      ComplexVector z0(n);
      for (auto& x : z0) x = std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 2.0 * M_PI));
      auto res = detail::project(std::move(z0), constraints, opt);
      const bool on_torus = std::all_of(res.z.begin(), res.z.end(), [](const Complex& x) { return std::abs(x) > 1e-8; });
      if (!on_torus || !(res.residual.norm() <= 1e-10 * num.abs_sum(res.z))) {
        ++probe.failed;
        continue;
      }
      ++probe.converged;
      const double r = criticality_residual(fp, res.z);
      if (!probe.witness || r < probe.min_residual) {
        probe.min_residual = r;
        probe.witness = res.z;
      }
    }
    rep.min_residual = std::min(rep.min_residual, probe.min_residual);
    if (probe.witness && probe.min_residual < tol) rep.witness_found = true;
    rep.faces.push_back(std::move(probe));
  }
  return rep;
}

}  // namespace mixlink
