#pragma once

#include <vector>

#include "cusp/lattice.hpp"

namespace cusp {

/// Vectors of a fixed negative square. For a definite lattice `radical` is
/// empty and `representatives` is the complete list. For a degenerate
/// semidefinite lattice the full solution set is {v + r : v in
/// representatives, r in span(radical)}.
struct ShortVectors {
  Matrix radical;
  std::vector<Vector> representatives;
};

ShortVectors vectors_of_square(const GramLattice& l, const Integer& square);

/// All x with x^T q x == target for a positive definite q (Fincke-Pohst).
/// Output is sorted lexicographically.
std::vector<Vector> enumerate_positive_definite(const Matrix& q, const Integer& target);

/// Coset representative of v modulo the radical rows with small Euclidean
/// coordinates; deterministic for each coset when v is already canonical.
Vector reduce_modulo(const Vector& v, const Matrix& radical_rows);

bool lex_less(const Vector& a, const Vector& b);

}  // namespace cusp
