#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusp/fibration.hpp"

namespace cusp {

/// x + (x.a) a for a root a (a.a == -2).
Vector reflect(const GramLattice& l, const Vector& root, const Vector& x);
Isometry reflection(const GramLattice& l, const Vector& root);

/// Order of s_a s_b: 2 for a.b = 0, 3 for |a.b| = 1, nullopt (infinite) for |a.b| >= 2.
std::optional<unsigned long> dihedral_order(const GramLattice& l, const Vector& a, const Vector& b);

/// Signs of x.r for every root r; requires x.x > 0.
std::vector<int> chamber_sign(const GramLattice& l, const Vector& x, const std::vector<Vector>& roots);

/// Blow-up Y~ of (Y, D) at a point p of the boundary, with the data needed
/// to generate sections of the fibration on Y and decide which pass through p.
struct PointedBlowup {
  LooijengaSurface blown;
  PeriodPoint blown_period;
  Vector exceptional;  // E_p on Y~
  std::size_t component = 0;
  BlowDown base;  // Y and its embedding into Pic(Y~)
  PeriodPoint base_period;
  EllipticFibration fibration;  // on Y
  TranslationGroup translations;  // on Y, no period filter

  Vector lift(const Vector& base_class) const;
};

/// Reconstructs Y as the blow-down of the last exceptional class of `blown`.
PointedBlowup pointed_blowup(const LooijengaSurface& blown, const PeriodPoint& blown_period);

struct SectionCandidate {
  Vector coefficients;  // translation coefficients on the direction basis
  Vector seed;          // exceptional class of Y that was translated
  Vector section;       // class on Y
  Integer residue;      // phi_{Y~}(C - E_p); zero iff C passes through p
};

/// Translates of every section of Y meeting the component of p, for
/// coefficient boxes of radius 0..bound, in order of radius then lexicographic.
std::vector<SectionCandidate> boundary_sections(const PointedBlowup& pb, unsigned long bound);

struct WeylCertificate {
  Vector section_a, section_b;  // on Y, both through p
  Vector alpha, beta;           // strict transforms C - E_p on Y~
  Integer pairing;
  std::optional<unsigned long> order;
  Vector witness;               // x in the sublattice, x.x > 0, x.alpha > 0, x.beta > 0
  std::vector<Vector> roots;    // positive roots a alpha + b beta used for sign vectors
  std::size_t words = 0;
  std::size_t distinct_chambers = 0;
};

struct CertificateOptions {
  std::size_t witness_count = 100;
  unsigned long section_bound = 4;
};

/// Two sections through p whose strict transforms are roots of M pairing to
/// at least 2, and distinct chamber sign vectors for words in their reflections.
/// Throws std::domain_error("certificate search exhausted") if no pair is found.
WeylCertificate weyl_infiniteness_certificate(const PointedBlowup& pb, const CertificateOptions& opts = {});

struct CriterionReport {
  bool signature_ok = false;
  bool rank_ok = false;
  bool zmminus1_ok = false;
  bool weyl_infinite_ok = false;
  bool disjoint_parabolics_ok = false;
  bool verdict = false;

  Signature signature;
  long m = 0;
  std::vector<Matrix> g_restricted;  // on M coordinates
  std::vector<Matrix> h_restricted;
  std::optional<Vector> g_fixed_line;  // M coordinates
  std::optional<Vector> h_fixed_line;
  long g_log_rank = 0;
  std::optional<WeylCertificate> weyl;
  std::vector<std::string> failures;
};

/// Checks the hypotheses of the non-arithmeticity criterion on M:
/// (a) signature (1, m) with m >= 3; (b) G is m - 1 independent commuting
/// parabolics with a common fixed line; (c) the reflection certificate is
/// infinite with enough distinct chambers; (d) H has a parabolic fixing a
/// different line. verdict is the conjunction.
CriterionReport totaro_check(const Sublattice& m, const std::vector<Isometry>& g, const std::vector<Isometry>& h,
                             const std::optional<WeylCertificate>& weyl, std::size_t witness_count = 100);

}  // namespace cusp
