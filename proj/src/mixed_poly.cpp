#include "mixlink/mixed_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "mixlink/errors.hpp"

namespace mixlink {

namespace {

void check_index(std::size_t j, std::size_t n) {
  if (j >= n) {
    throw std::out_of_range("variable index " + std::to_string(j + 1) + " out of range 1.." +
                            std::to_string(n));
  }
}

void check_same_dimension(const MixedPolynomial& a, const MixedPolynomial& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("polynomial dimensions differ: " + std::to_string(a.dimension()) + " vs " +
                         std::to_string(b.dimension()));
  }
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

MixedPolynomial::MixedPolynomial(std::size_t n, std::span<const MixedTerm> terms) : n_(n) {
  for (const auto& t : terms) {
    if (t.nu.size() != n || t.mu.size() != n) {
      throw DimensionError("exponent vector length does not match dimension " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (t.nu[i] < 0 || t.mu[i] < 0) throw std::invalid_argument("negative exponent");
    }
    insert(Monomial{t.nu, t.mu}, t.coeff);
  }
}

void MixedPolynomial::insert(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MixedPolynomial MixedPolynomial::constant(std::size_t n, const GaussianRational& c) {
  return monomial(n, c, ExponentVector(n, 0), ExponentVector(n, 0));
}

MixedPolynomial MixedPolynomial::variable(std::size_t n, std::size_t j) {
  check_index(j, n);
  ExponentVector nu(n, 0);
  nu[j] = 1;
  return monomial(n, 1, std::move(nu), ExponentVector(n, 0));
}

MixedPolynomial MixedPolynomial::conj_variable(std::size_t n, std::size_t j) {
  check_index(j, n);
  ExponentVector mu(n, 0);
  mu[j] = 1;
  return monomial(n, 1, ExponentVector(n, 0), std::move(mu));
}

MixedPolynomial MixedPolynomial::monomial(std::size_t n, const GaussianRational& c, ExponentVector nu,
                                          ExponentVector mu) {
  MixedTerm t{c, std::move(nu), std::move(mu)};
  return MixedPolynomial(n, std::span<const MixedTerm>(&t, 1));
}

std::vector<MixedTerm> MixedPolynomial::term_list() const {
  std::vector<MixedTerm> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({c, m.nu, m.mu});
  return out;
}

GaussianRational MixedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

int MixedPolynomial::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = std::accumulate(m.nu.begin(), m.nu.end(), 0) + std::accumulate(m.mu.begin(), m.mu.end(), 0);
    best = std::max(best, d);
  }
  return best;
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
  check_same_dimension(a, b);
  MixedPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.insert(m, c);
  return r;
}

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) { return a + (-b); }

MixedPolynomial MixedPolynomial::operator-() const {
  MixedPolynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  check_same_dimension(a, b);
  MixedPolynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.insert(Monomial{add(ma.nu, mb.nu), add(ma.mu, mb.mu)}, ca * cb);
    }
  }
  return r;
}

MixedPolynomial operator*(const MixedPolynomial& a, const GaussianRational& s) {
  MixedPolynomial r(a.n_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
  return r;
}

MixedPolynomial MixedPolynomial::pow(unsigned e) const {
  MixedPolynomial result = constant(n_, 1);
  MixedPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MixedPolynomial MixedPolynomial::times_variable(std::size_t j) const {
  check_index(j, n_);
  MixedPolynomial r(n_);
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    ++m.nu[j];
    r.terms_.emplace(std::move(m), c);
  }
  return r;
}

MixedPolynomial MixedPolynomial::times_conj_variable(std::size_t j) const {
  check_index(j, n_);
  MixedPolynomial r(n_);
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    ++m.mu[j];
    r.terms_.emplace(std::move(m), c);
  }
  return r;
}

MixedPolynomial MixedPolynomial::conjugate() const {
  MixedPolynomial r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.mu, m.nu}, c.conj());
  return r;
}

MixedPolynomial MixedPolynomial::real_part() const {
  return (*this + conjugate()) * GaussianRational(mpq_class(1, 2));
}

MixedPolynomial MixedPolynomial::imag_part() const {
  // (f - conj f) / (2i) = -(i/2) (f - conj f)
  return (*this - conjugate()) * GaussianRational(0, mpq_class(-1, 2));
}

bool MixedPolynomial::is_real_valued() const {
  for (const auto& [m, c] : terms_) {
    if (!(coefficient(Monomial{m.mu, m.nu}) == c.conj())) return false;
  }
  return true;
}

bool MixedPolynomial::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return std::all_of(kv.first.mu.begin(), kv.first.mu.end(), [](int e) { return e == 0; });
  });
}

MixedPolynomial MixedPolynomial::wirtinger_dz(std::size_t j) const {
  check_index(j, n_);
  MixedPolynomial r(n_);
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    const int e = m.nu[j];
    if (e == 0) continue;
    --m.nu[j];
    r.terms_.emplace(std::move(m), c * GaussianRational(e));
  }
  return r;
}

MixedPolynomial MixedPolynomial::wirtinger_dzbar(std::size_t j) const {
  check_index(j, n_);
  MixedPolynomial r(n_);
  for (const auto& [key, c] : terms_) {
    Monomial m = key;
    const int e = m.mu[j];
    if (e == 0) continue;
    --m.mu[j];
    r.terms_.emplace(std::move(m), c * GaussianRational(e));
  }
  return r;
}

Complex MixedPolynomial::evaluate(ComplexSpan z) const {
  if (z.size() != n_) {
    throw DimensionError("point has " + std::to_string(z.size()) + " coordinates, polynomial has " +
                         std::to_string(n_) + " variables");
  }
  Complex sum = 0.0;
  for (const auto& [m, c] : terms_) {
    Complex v = c.to_complex();
    for (std::size_t j = 0; j < n_; ++j) {
      for (int k = 0; k < m.nu[j]; ++k) v *= z[j];
      for (int k = 0; k < m.mu[j]; ++k) v *= std::conj(z[j]);
    }
    sum += v;
  }
  return sum;
}

std::string MixedPolynomial::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t j = 0; j < n_; ++j) {
      const std::string name = std::string(1, var) + std::to_string(j + 1);
      if (m.nu[j] > 0) {
        if (!mono.empty()) mono += "*";
        mono += name;
        if (m.nu[j] > 1) mono += "^" + std::to_string(m.nu[j]);
      }
      if (m.mu[j] > 0) {
        if (!mono.empty()) mono += "*";
        mono += "~" + name;
        if (m.mu[j] > 1) mono += "^" + std::to_string(m.mu[j]);
      }
    }
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      mpq_class a = c.re();
      if (sgn(a) < 0) {
        negative = true;
        a = -a;
      }
      if (!(a == 1 && !mono.empty())) coeff = a.get_str();
    } else {
      coeff = c.to_string();
    }
    std::string term = coeff;
    if (!coeff.empty() && !mono.empty()) term += "*";
    term += mono;
    if (first) {
      out += negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

}  // namespace mixlink
