#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mixlink/rational.hpp"

namespace mixlink {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using ComplexSpan = std::span<const Complex>;

/// Non-negative exponent vector of length n.
using ExponentVector = std::vector<int>;

/// Exponent pair (nu, mu) of z^nu zbar^mu.
struct Monomial {
  ExponentVector nu;
  ExponentVector mu;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

struct MixedTerm {
  GaussianRational coeff;
  ExponentVector nu;
  ExponentVector mu;
};

/// Exact sparse mixed polynomial f(z, zbar) = sum c_{nu,mu} z^nu zbar^mu in n
/// variables. Values are immutable: every operation returns a new polynomial.
/// Terms are kept in descending lexicographic order on (nu, mu), never with
/// zero coefficients.
class MixedPolynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational, std::greater<>>;

  explicit MixedPolynomial(std::size_t n = 0) : n_(n) {}
  /// Merges repeated monomials and drops zero coefficients.
  MixedPolynomial(std::size_t n, std::span<const MixedTerm> terms);

  static MixedPolynomial constant(std::size_t n, const GaussianRational& c);
  /// z_j (0-based j).
  static MixedPolynomial variable(std::size_t n, std::size_t j);
  /// zbar_j (0-based j).
  static MixedPolynomial conj_variable(std::size_t n, std::size_t j);
  static MixedPolynomial monomial(std::size_t n, const GaussianRational& c, ExponentVector nu,
                                  ExponentVector mu);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<MixedTerm> term_list() const;
  GaussianRational coefficient(const Monomial& m) const;
  /// Max over terms of |nu| + |mu|; -1 for the zero polynomial.
  int total_degree() const;

  friend MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
  friend MixedPolynomial operator*(const MixedPolynomial& a, const GaussianRational& s);
  friend MixedPolynomial operator*(const GaussianRational& s, const MixedPolynomial& a) { return a * s; }
  MixedPolynomial operator-() const;
  friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  MixedPolynomial pow(unsigned e) const;

  /// z_j * f and zbar_j * f.
  MixedPolynomial times_variable(std::size_t j) const;
  MixedPolynomial times_conj_variable(std::size_t j) const;

  /// Swaps (nu, mu) and conjugates coefficients: the polynomial of conj(f).
  MixedPolynomial conjugate() const;
  /// (f + conj f) / 2 and (f - conj f) / (2i); both real valued.
  MixedPolynomial real_part() const;
  MixedPolynomial imag_part() const;

  /// c_{nu,mu} = conj(c_{mu,nu}) for every term.
  bool is_real_valued() const;
  /// No zbar appears.
  bool is_holomorphic() const;

  /// Wirtinger derivatives d/dz_j and d/dzbar_j (0-based j).
  MixedPolynomial wirtinger_dz(std::size_t j) const;
  MixedPolynomial wirtinger_dzbar(std::size_t j) const;

  /// Double-precision evaluation at a point of C^n.
  Complex evaluate(ComplexSpan z) const;

  /// Serialization in the input grammar; `var` is the variable letter.
  std::string to_string(char var = 'z') const;

 private:
  void insert(const Monomial& m, const GaussianRational& c);

  std::size_t n_;
  TermMap terms_;
};

}  // namespace mixlink
