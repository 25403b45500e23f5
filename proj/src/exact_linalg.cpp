#include "mixlink/detail/exact_linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace mixlink::detail {

namespace {

// In-place reduced row echelon form of the augmented matrix; returns pivot
// columns (restricted to the first ncols columns).
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const mpq_class inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const RationalVector& b,
                                           std::size_t ncols) {
  RationalMatrix m;
  m.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    RationalVector row(a[r].begin(), a[r].end());
    row.resize(ncols);
    row.push_back(b.empty() ? mpq_class(0) : b[r]);
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, ncols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (sgn(m[r][ncols]) != 0) return std::nullopt;
  }
  AffineSolution sol;
  sol.particular.assign(ncols, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = m[k][ncols];
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(ncols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    sol.directions.push_back(std::move(v));
  }
  return sol;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t ncols) {
  return solve_affine(a, {}, ncols)->directions;
}

std::size_t rank(const RationalMatrix& a, std::size_t ncols) { return ncols - nullspace(a, ncols).size(); }

long gcd_of(const IntVector& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IntVector primitive_integer(const RationalVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class k = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(k);
  }
  if (g == 0) throw std::invalid_argument("primitive_integer of zero vector");
  IntVector out;
  for (auto& k : ints) {
    mpz_class q = k / g;
    if (!q.fits_slong_p()) throw std::overflow_error("weight does not fit in a long");
    out.push_back(q.get_si());
  }
  return out;
}

namespace {

bool all_positive(const IntVector& v) {
  for (long x : v) {
    if (x <= 0) return false;
  }
  return true;
}

struct Search {
  const RationalMatrix& a;
  std::size_t n;
  const std::function<bool(const IntVector&)>& accept;
  long bound;
  std::size_t budget;
  std::size_t visited = 0;

  // prefix fixes q_0..q_{k-1}; returns the lex-smallest completion.
  std::optional<IntVector> run(IntVector& prefix) {
    if (++visited > budget) return std::nullopt;
    const std::size_t k = prefix.size();
    // Remaining system: A_rest q_rest = -A_prefix q_prefix.
    RationalMatrix rest(a.size(), RationalVector(n - k));
    RationalVector rhs(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c < k) {
          rhs[r] -= a[r][c] * prefix[c];
        } else {
          rest[r][c - k] = a[r][c];
        }
      }
    }
    auto sol = solve_affine(rest, rhs, n - k);
    if (!sol) return std::nullopt;
    if (sol->directions.empty()) {
      IntVector full = prefix;
      for (const auto& x : sol->particular) {
        if (x.get_den() != 1 || sgn(x) <= 0 || !x.get_num().fits_slong_p()) return std::nullopt;
        full.push_back(x.get_num().get_si());
      }
      if (gcd_of(full) != 1) return std::nullopt;
      if (accept && !accept(full)) return std::nullopt;
      return full;
    }
    for (long q = 1; q <= bound; ++q) {
      prefix.push_back(q);
      auto found = run(prefix);
      prefix.pop_back();
      if (found) return found;
      if (visited > budget) return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<PositiveSolution> find_positive_solution(const RationalMatrix& a, std::size_t ncols,
                                                       const std::function<bool(const IntVector&)>& accept,
                                                       long bound, std::size_t node_budget) {
  const auto basis = nullspace(a, ncols);
  if (basis.empty()) return std::nullopt;
  if (basis.size() == 1) {
    IntVector v = primitive_integer(basis.front());
    if (!all_positive(v)) {
      for (auto& x : v) x = -x;
    }
    if (!all_positive(v)) return std::nullopt;
    if (accept && !accept(v)) return std::nullopt;
    return PositiveSolution{std::move(v), 1};
  }
  Search s{a, ncols, accept, bound, node_budget};
  IntVector prefix;
  auto found = s.run(prefix);
  if (!found) return std::nullopt;
  return PositiveSolution{std::move(*found), basis.size()};
}

}  // namespace mixlink::detail
