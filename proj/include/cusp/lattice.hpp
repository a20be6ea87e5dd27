#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cusp/matrix.hpp"

namespace cusp {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

enum class Definiteness {
  zero,
  negative_definite,
  negative_semidefinite_degenerate,
  positive_definite,
  positive_semidefinite_degenerate,
  indefinite,
};

std::string_view to_string(Definiteness d);
Definiteness classify_definiteness(const Signature& s);

/// Sylvester signature of a symmetric integer matrix by congruence
/// diagonalization over the rationals.
Signature signature_of(const Matrix& gram);

/// Free abelian group with an integral symmetric bilinear form.
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(Matrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Integer pair(const Vector& u, const Vector& v) const;
  Integer norm(const Vector& v) const { return pair(v, v); }
  /// Row vector of pairings of v with each basis element.
  Vector pairing_row(const Vector& v) const;

  Signature signature() const { return signature_of(gram_); }
  Definiteness definiteness() const { return classify_definiteness(signature()); }

  void check_vector(const Vector& v) const;

  friend bool operator==(const GramLattice&, const GramLattice&) = default;

 private:
  Matrix gram_;
  std::vector<std::string> labels_;
};

/// Saturated sublattice of a Gram lattice, given by basis rows in ambient coordinates.
class Sublattice {
 public:
  Sublattice() = default;
  /// Throws unless the rows are independent and saturated.
  Sublattice(GramLattice ambient, Matrix basis);

  const GramLattice& ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  const Matrix& induced_gram() const { return induced_; }
  std::size_t rank() const { return basis_.rows(); }

  /// The sublattice as a lattice in its own right.
  GramLattice as_lattice() const { return GramLattice(induced_); }

  std::optional<Vector> coordinates(const Vector& ambient_vector) const;
  bool contains(const Vector& ambient_vector) const { return coordinates(ambient_vector).has_value(); }
  Vector to_ambient(const Vector& coords) const;

  Signature signature() const { return signature_of(induced_); }
  Definiteness definiteness() const { return classify_definiteness(signature()); }

 private:
  static std::size_t rank_of_rows(const Matrix& m);

  GramLattice ambient_;
  Matrix basis_;
  Matrix induced_;
};

/// Gram matrix of a list of ambient vectors.
Matrix gram_of(const GramLattice& l, const std::vector<Vector>& vs);

/// Saturated sublattice of classes orthogonal to every vector in spans.
Sublattice orthogonal_complement(const GramLattice& l, const std::vector<Vector>& spans);

/// Rank of the matrix of pairings of spans against the basis.
std::size_t pairing_rank(const GramLattice& l, const std::vector<Vector>& spans);

/// Radical (kernel of the form) as a saturated sublattice.
Sublattice radical(const GramLattice& l);

}  // namespace cusp
