#pragma once

// Exact rank, determinants and invertibility for SqMatrix and row lists.

#include <cstdint>
#include <vector>

#include "splitring/matrix.hpp"

namespace splitring {

/// Distinct prime divisors of m >= 2, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t m);

/// Whether `rank` can handle rows over this ring.
bool rank_supported(const RingPtr& ring);

/// Rank of a list of equal-length row vectors.
///   Z, Q: rank over Q.
///   Zmod:m: the minimum over primes p | m of the rank mod p.
///   PolyCoef over one of these: rank after substituting random values for
///   the indeterminates, maximized over a few draws. This never exceeds the
///   true rank, so a result equal to the row count certifies independence.
/// Other rings raise Unsupported.
std::size_t rank(const RingPtr& ring, const std::vector<ElemVec>& rows, std::uint64_t seed = 1);

/// Determinant over a commutative ring: Gaussian elimination over Q and
/// Z/p, fraction-free Bareiss over Z, division-free Berkowitz otherwise.
Elem determinant(const SqMatrix& m);

/// Two-sided invertibility. Matrices over matrix rings are flattened; over
/// commutative rings this is "determinant is a unit".
bool is_invertible(const SqMatrix& m);

/// Degree of the minimal polynomial of m over Q or Z/p, found as the first
/// linear dependence among the vectorized powers I, m, m^2, ...
int minimal_polynomial_degree(const SqMatrix& m);

/// Entries of a matrix over Mat:k:R expanded into a (n*k)-square matrix over R.
SqMatrix flatten(const SqMatrix& m);

}  // namespace splitring
