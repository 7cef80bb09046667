#pragma once

#include <cstddef>
#include <vector>

#include "sigform/matrix.hpp"
#include "sigform/rational.hpp"

namespace sigform::linalg {

/// Result of a fraction-free (Bareiss) reduction of a rational matrix.
/// Each row is first scaled by the lcm of its denominators, so all
/// intermediate values stay integral.
struct BareissResult {
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

BareissResult bareiss_reduce(const RatMatrix& m);

inline std::size_t rank(const RatMatrix& m) { return bareiss_reduce(m).rank; }

/// True iff the symmetric matrix is positive definite.  Uses Bareiss
/// elimination without pivoting on the lcm-scaled matrix; the k-th pivot is
/// then a positive multiple of the k-th leading principal minor.
bool is_positive_definite(const RatMatrix& sym);

/// Leading principal minors of a square matrix, d_1 .. d_n.
std::vector<Rational> leading_principal_minors(const RatMatrix& m);

/// Solves A X = B for square nonsingular A by Gauss-Jordan elimination.
/// Throws std::domain_error if A is singular.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

RatMatrix inverse(const RatMatrix& a);

/// Basis of the right null space {x : A x = 0}, one column per vector.
RatMatrix null_space(const RatMatrix& a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric matrix via exact congruence
/// diagonalization.
Inertia inertia(const RatMatrix& sym);

}  // namespace sigform::linalg
