#pragma once

// Small exact rational linear algebra used by weight detection and Newton
// boundary enumeration. Sizes are tiny (n <= ~8), so dense RREF is fine.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace mixlink::detail {

using RationalMatrix = std::vector<std::vector<mpq_class>>;
using RationalVector = std::vector<mpq_class>;
using IntVector = std::vector<long>;

/// Basis of {x : A x = 0} for an m x ncols matrix A.
std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t ncols);

/// Rank of A.
std::size_t rank(const RationalMatrix& a, std::size_t ncols);

/// Solution set {x : A x = b}: nullopt if inconsistent, else a particular
/// solution and a nullspace basis.
struct AffineSolution {
  RationalVector particular;
  std::vector<RationalVector> directions;
};
std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const RationalVector& b,
                                           std::size_t ncols);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (gcd of entries 1, sign preserved).
IntVector primitive_integer(const RationalVector& v);

long gcd_of(const IntVector& v);

/// Search for a strictly positive primitive integer solution of A q = 0,
/// where A has integer entries. Returns the lexicographically smallest such
/// vector satisfying `accept`. With a one-dimensional nullspace the answer is
/// exact; for larger nullspaces the search is a depth-first enumeration with
/// entries bounded by `bound` and at most `node_budget` visited nodes.
struct PositiveSolution {
  IntVector weights;
  std::size_t nullity = 0;
};
std::optional<PositiveSolution> find_positive_solution(
    const RationalMatrix& a, std::size_t ncols,
    const std::function<bool(const IntVector&)>& accept = nullptr, long bound = 64,
    std::size_t node_budget = 200000);

}  // namespace mixlink::detail
