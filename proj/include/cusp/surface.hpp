#pragma once

#include <array>
#include <vector>

#include "cusp/lattice.hpp"

namespace cusp {

/// Primitive rays v_1..v_r of a smooth complete toric surface fan.
struct ToricFan {
  std::vector<std::array<Integer, 2>> rays;
};

struct BlowupRecord {
  std::size_t component = 0;  // 0-based boundary index
  Vector exceptional;         // class in Picard coordinates

  friend bool operator==(const BlowupRecord&, const BlowupRecord&) = default;
};

/// Picard lattice with a marked oriented anticanonical cycle D_1 + ... + D_r (r >= 3).
class LooijengaSurface {
 public:
  /// Validates: boundary squares match self_ints, cyclic adjacency pattern,
  /// rho == 10 - D^2, and Picard signature (1, rho - 1).
  LooijengaSurface(GramLattice picard, std::vector<Vector> boundary, std::vector<long> self_ints,
                   std::vector<BlowupRecord> history = {});

  const GramLattice& picard() const { return picard_; }
  const std::vector<Vector>& boundary() const { return boundary_; }
  const std::vector<long>& self_intersections() const { return self_ints_; }
  const std::vector<BlowupRecord>& history() const { return history_; }

  std::size_t cycle_length() const { return boundary_.size(); }
  std::size_t picard_rank() const { return picard_.rank(); }
  /// D = sum of the boundary classes (anticanonical class).
  Vector anticanonical() const;
  Integer boundary_square() const;
  Matrix boundary_gram() const { return gram_of(picard_, boundary_); }

  friend bool operator==(const LooijengaSurface&, const LooijengaSurface&) = default;

 private:
  GramLattice picard_;
  std::vector<Vector> boundary_;
  std::vector<long> self_ints_;
  std::vector<BlowupRecord> history_;
};

struct ToricSurface {
  LooijengaSurface surface;
  ToricFan fan;
};

/// Toric pair with the given boundary self-intersection cycle. The Picard
/// basis is D_3, ..., D_r; D_1 and D_2 are eliminated through the two linear
/// relations, which is exact because v_1, v_2 is the standard basis.
ToricSurface toric_from_sequence(const std::vector<long>& self_ints);

/// Blow-up of a general point of the interior of boundary component `component`.
LooijengaSurface interior_blowup(const LooijengaSurface& s, std::size_t component);

struct BlowDown {
  LooijengaSurface surface;
  Matrix embedding;  // rows: new Picard basis in the old coordinates
};

/// Contraction of an interior (-1)-class meeting exactly one boundary component once.
BlowDown blow_down_with_embedding(const LooijengaSurface& s, const Vector& curve);
LooijengaSurface blow_down(const LooijengaSurface& s, const Vector& curve);

struct BoundaryComplement {
  Sublattice lattice;         // Lambda(Y, D)
  std::size_t relations = 0;  // s = rank of the kernel of Z^r -> Pic
};

BoundaryComplement boundary_complement(const LooijengaSurface& s);

struct BoundaryDefiniteness {
  Definiteness gram_class = Definiteness::zero;
  Signature signature;
  bool criterion_applicable = false;  // no (-1)-components
  bool criterion_definite = false;    // all a_i <= -2 and some a_i <= -3
  bool agrees = false;                // only meaningful when applicable
};

BoundaryDefiniteness boundary_definiteness(const LooijengaSurface& s);

}  // namespace cusp
