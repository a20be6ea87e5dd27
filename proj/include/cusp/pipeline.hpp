#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusp/json_io.hpp"

namespace cusp {

struct PipelineConfig {
  unsigned long modulus_bound = 64;
  std::size_t witness_count = 100;
  unsigned long section_bound = 4;
  bool force_beta_zero = false;
};

/// Reads known keys from a config document; unknown keys are rejected.
PipelineConfig config_from_json(const Json& j, PipelineConfig base = {});
Json to_json(const PipelineConfig& c);

/// Everything derived from a blow-up Y~ of (Y, D) at a boundary point p
/// together with its period point.
struct Certification {
  PointedBlowup pointed;
  Sublattice m;
  TranslationGroup g_group;  // on Y, directions fixing p
  std::vector<Isometry> g;   // on Pic(Y~)
  std::optional<SectionCandidate> q;  // section of Y meeting the component of p elsewhere
  std::optional<BlowDown> second;     // Y' = Y~ with the strict transform of q contracted
  std::optional<PeriodPoint> second_period;
  std::optional<EllipticFibration> second_fibration;
  std::optional<TranslationGroup> h_group;
  std::vector<Isometry> h;  // on Pic(Y~)
  std::optional<WeylCertificate> weyl;
  std::optional<std::string> weyl_error;
  CriterionReport report;
};

/// Runs the criterion on a blown-up pair. Search failures are reported
/// through the criterion rather than thrown; malformed input still throws.
Certification certify(const LooijengaSurface& blown, const PeriodPoint& blown_period, const CertificateOptions& opts = {});
Json to_json(const Certification& c);

struct Stage {
  std::string name;
  std::string claim;
  Json computed;
  Json paper_value;  // keys present here must equal the computed ones
  bool pass = false;
};

struct PipelineReport {
  int format_version = 1;
  PipelineConfig config;
  std::vector<Stage> stages;
  std::optional<std::string> failed_stage;
  std::optional<CriterionReport> criterion;
  std::vector<std::string> assumptions;

  bool ok() const { return !failed_stage && criterion && criterion->verdict; }
};

/// Replays the construction from the toric seed to the criterion check.
/// Stops at the first failing stage and names it.
PipelineReport verify_paper(const PipelineConfig& config = {});
Json to_json(const PipelineReport& r);

}  // namespace cusp
