#include "mixlink/covering.hpp"

#include <stdexcept>

#include "mixlink/detail/exact_linalg.hpp"
#include "mixlink/errors.hpp"

namespace mixlink {

CoveringSpec::CoveringSpec(std::vector<int> a, std::vector<int> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.empty()) throw InvalidCoveringError("covering vectors a and b must have equal nonzero length");
  int sign = 0;
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (a_[j] < 0 || b_[j] < 0) throw InvalidCoveringError("covering exponents must be non-negative");
    if (a_[j] == b_[j]) throw InvalidCoveringError("covering needs a_j != b_j (coordinate " + std::to_string(j + 1) + ")");
    const int s = a_[j] > b_[j] ? 1 : -1;
    if (sign != 0 && s != sign) throw InvalidCoveringError("mixed orientation: need a >> b or b >> a in every coordinate");
    sign = s;
  }
  orientation_ = sign;
  homogeneous_ = true;
  for (std::size_t j = 1; j < a_.size(); ++j) {
    if (a_[j] != a_[0] || b_[j] != b_[0]) homogeneous_ = false;
  }
}

CoveringSpec CoveringSpec::homogeneous(std::size_t n, int a, int b) {
  return CoveringSpec(std::vector<int>(n, a), std::vector<int>(n, b));
}

ComplexVector CoveringSpec::apply(ComplexSpan w) const {
  if (w.size() != a_.size()) throw DimensionError("point dimension does not match covering");
  ComplexVector z(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    Complex v = 1.0;
    for (int k = 0; k < a_[j]; ++k) v *= w[j];
    for (int k = 0; k < b_[j]; ++k) v *= std::conj(w[j]);
    z[j] = v;
  }
  return z;
}

MixedPolynomial pullback(const MixedPolynomial& f, const CoveringSpec& spec) {
  const std::size_t n = f.dimension();
  if (spec.dimension() != n) throw DimensionError("covering dimension does not match polynomial");
  // z_j -> w_j^a wbar_j^b and zbar_j -> wbar_j^a w_j^b, so z^nu zbar^mu maps to
  // the single monomial w^{a nu + b mu} wbar^{b nu + a mu}.
  std::vector<MixedTerm> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    MixedTerm t{c, ExponentVector(n), ExponentVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
      t.nu[j] = spec.a()[j] * m.nu[j] + spec.b()[j] * m.mu[j];
      t.mu[j] = spec.b()[j] * m.nu[j] + spec.a()[j] * m.mu[j];
    }
    out.push_back(std::move(t));
  }
  return MixedPolynomial(n, out);
}

long covering_degree(const CoveringSpec& spec) {
  long d = 1;
  for (std::size_t j = 0; j < spec.dimension(); ++j) d *= std::abs(spec.a()[j] - spec.b()[j]);
  return d;
}

namespace {

// Clears denominators of a rational weight vector whose monomials have
// degree 1; returns the primitive integer vector and the integer degree.
std::pair<WeightVector, long> clear(const std::vector<mpq_class>& w) {
  detail::RationalVector v(w.begin(), w.end());
  WeightVector ints = detail::primitive_integer(v);
  // ints = L * w for a rational L > 0 or < 0; the degree of a degree-1 monomial is L.
  mpq_class ratio(ints[0]);
  ratio /= w[0];
  if (sgn(ratio) < 0) {
    for (auto& x : ints) x = -x;
    ratio = -ratio;
  }
  if (ratio.get_den() != 1) throw std::logic_error("non-integral cleared degree");
  long deg = ratio.get_num().get_si();
  // Negative weights (anti-holomorphic polar case): flip to positive weights,
  // which negates the degree.
  if (ints[0] < 0) {
    for (auto& x : ints) x = -x;
    deg = -deg;
  }
  return {ints, deg};
}

}  // namespace

TransformedWeights transform_weights(const WeightVector& q, long d_r, const WeightVector& s, long d_p,
                                     const CoveringSpec& spec) {
  const std::size_t n = spec.dimension();
  if (q.size() != n || s.size() != n) throw DimensionError("weight vectors must match covering dimension");
  if (d_r == 0 || d_p == 0) throw std::invalid_argument("normalized weights need nonzero degrees d_r and d_p");
  for (std::size_t j = 0; j < n; ++j) {
    if (q[j] <= 0 || s[j] <= 0) throw std::invalid_argument("weights must be positive");
  }
  TransformedWeights out;
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class qh(q[j]), sh(s[j]);
    qh /= mpq_class(d_r * (spec.a()[j] + spec.b()[j]));
    sh /= mpq_class(d_p * (spec.a()[j] - spec.b()[j]));
    out.q_hat.push_back(qh);
    out.s_hat.push_back(sh);
  }
  std::tie(out.radial, out.m_r) = clear(out.q_hat);
  std::tie(out.polar, out.m_p) = clear(out.s_hat);
  return out;
}

}  // namespace mixlink
