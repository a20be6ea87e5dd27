#include "cusp/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "cusp/normal_form.hpp"

namespace cusp {

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.null) + ")";
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::zero: return "zero";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::negative_semidefinite_degenerate: return "negative_semidefinite_degenerate";
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::positive_semidefinite_degenerate: return "positive_semidefinite_degenerate";
    case Definiteness::indefinite: return "indefinite";
  }
  return "unknown";
}

Definiteness classify_definiteness(const Signature& s) {
  if (s.positive > 0 && s.negative > 0) return Definiteness::indefinite;
  if (s.positive == 0 && s.negative == 0) return Definiteness::zero;
  if (s.positive == 0)
    return s.null == 0 ? Definiteness::negative_definite : Definiteness::negative_semidefinite_degenerate;
  return s.null == 0 ? Definiteness::positive_definite : Definiteness::positive_semidefinite_degenerate;
}

Signature signature_of(const Matrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
  std::size_t n = gram.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram(i, j));

  Signature s;
  // Active indices shrink as pivots are eliminated.
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  auto eliminate = [&](std::size_t p) {
    Rational d = a[p][p];
    (d > 0 ? s.positive : s.negative) += 1;
    std::erase(live, p);
    for (std::size_t i : live) {
      if (a[i][p] == 0) continue;
      Rational f = a[i][p] / d;
      for (std::size_t j : live) a[i][j] -= f * a[p][j];
    }
  };

  while (!live.empty()) {
    std::optional<std::size_t> pivot;
    for (std::size_t i : live)
      if (a[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot) {
      eliminate(*pivot);
      continue;
    }
    // All live diagonal entries vanish: find a nonzero off-diagonal a_ij and
    // replace e_i by e_i + e_j, which makes the new diagonal 2 a_ij.
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i : live) {
      for (std::size_t j : live)
        if (i != j && a[i][j] != 0) {
          off = {i, j};
          break;
        }
      if (off) break;
    }
    if (!off) {
      s.null += live.size();
      break;
    }
    auto [i, j] = *off;
    for (std::size_t k : live) a[i][k] += a[j][k];
    for (std::size_t k : live) a[k][i] = (k == i) ? a[i][i] + a[i][j] : a[i][k];
    eliminate(i);
  }
  return s;
}

GramLattice::GramLattice(Matrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.square()) throw std::invalid_argument("Gram matrix is not square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix is not symmetric");
  if (!labels_.empty() && labels_.size() != gram_.rows())
    throw std::invalid_argument("basis_labels length does not match rank");
}

void GramLattice::check_vector(const Vector& v) const {
  if (v.size() != rank())
    throw std::invalid_argument("dimension mismatch: vector of length " + std::to_string(v.size()) +
                                " in lattice of rank " + std::to_string(rank()));
}

Integer GramLattice::pair(const Vector& u, const Vector& v) const {
  check_vector(u);
  check_vector(v);
  return dot(u, gram_ * v);
}

Vector GramLattice::pairing_row(const Vector& v) const {
  check_vector(v);
  return gram_ * v;
}

Sublattice::Sublattice(GramLattice ambient, Matrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() > 0 && basis_.cols() != ambient_.rank())
    throw std::invalid_argument("sublattice basis has wrong length");
  if (basis_.rows() == 0) basis_ = Matrix(0, ambient_.rank());
  if (rank_of_rows(basis_) != basis_.rows()) throw std::invalid_argument("sublattice basis is dependent");
  if (!is_saturated(basis_)) throw std::invalid_argument("sublattice is not saturated");
  induced_ = basis_ * ambient_.gram() * basis_.transpose();
}

std::size_t Sublattice::rank_of_rows(const Matrix& m) { return cusp::rank(m); }

std::optional<Vector> Sublattice::coordinates(const Vector& v) const {
  ambient_.check_vector(v);
  return solve_left(basis_, v);
}

Vector Sublattice::to_ambient(const Vector& coords) const {
  if (coords.size() != rank()) throw std::invalid_argument("dimension mismatch in sublattice coordinates");
  return coords * basis_;
}

Matrix gram_of(const GramLattice& l, const std::vector<Vector>& vs) {
  Matrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) g(i, j) = g(j, i) = l.pair(vs[i], vs[j]);
  return g;
}

namespace {
Matrix pairing_matrix(const GramLattice& l, const std::vector<Vector>& spans) {
  // column j = G * s_j, so x * M = 0 iff x pairs to zero with every s_j
  Matrix m(l.rank(), spans.size());
  for (std::size_t j = 0; j < spans.size(); ++j) {
    Vector c = l.pairing_row(spans[j]);
    for (std::size_t i = 0; i < l.rank(); ++i) m(i, j) = c[i];
  }
  return m;
}
}  // namespace

Sublattice orthogonal_complement(const GramLattice& l, const std::vector<Vector>& spans) {
  return Sublattice(l, left_kernel(pairing_matrix(l, spans)));
}

std::size_t pairing_rank(const GramLattice& l, const std::vector<Vector>& spans) {
  return cusp::rank(pairing_matrix(l, spans));
}

Sublattice radical(const GramLattice& l) { return Sublattice(l, left_kernel(l.gram())); }

}  // namespace cusp
