#pragma once

#include "tropkit/fan_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropkit {

struct BoundaryDivisor {
  std::string id;
  ZVector val;  ///< the divisorial valuation restricted to M, a point of N
  friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;
};

/**
 * Boundary divisors with their valuation vectors and the collections of
 * divisors with nonempty common intersection.  The strata must form a nerve:
 * closed under subsets, with the empty stratum present.
 */
struct BoundaryData {
  std::size_t rank = 0;
  std::vector<BoundaryDivisor> divisors;
  std::vector<std::vector<std::string>> strata;
  friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
};

/// Throws InvalidArgument naming the first problem (unknown id, missing subset, ...).
void validate_boundary_data(const BoundaryData& data);

struct StratumCone {
  std::vector<std::string> stratum;  ///< sorted ids
  Cone cone;                         ///< cone(val_D : D in stratum)
  bool strictly_simplicial = false;  ///< generators extend to a lattice basis
};

struct GeomTropResult {
  std::vector<StratumCone> cones;  ///< one per stratum, strata in canonical order
  FanCheck fan_status;
};

GeomTropResult geometric_tropicalization(const BoundaryData& data);

/// Integer m with <m, val_pivot> = 1 and <m, val_D> = 0 for the other D in the stratum.
std::optional<ZVector> check_condition2(const BoundaryData& data, const std::vector<std::string>& stratum,
                                        const std::string& pivot);

struct Condition2Entry {
  std::vector<std::string> stratum;
  std::string pivot;
  std::optional<ZVector> solution;
};

struct SchoenCertificate {
  GeomTropResult tropicalization;
  std::vector<Condition2Entry> condition2;
  bool condition2_holds = true;
  bool condition3_holds = true;
  bool all_strictly_simplicial = true;
  /// Condition (1) concerns coordinate rings of open strata and is not machine-checked.
  static constexpr const char* condition1_note = "not machine-checked";
  bool lattice_conditions_hold() const { return condition2_holds && condition3_holds; }
};

SchoenCertificate schoen_certificate(const BoundaryData& data);

struct HubschConeReport {
  std::size_t cone_index = 0;        ///< index into Fan::cones()
  std::size_t quotient_rank = 0;     ///< rank of N / span(sigma)
  std::vector<ZVector> translation;  ///< translation space of the projected star, quotient coordinates
};

enum class HubschVerdict { Pass, Fail, Undetermined };

struct HubschReport {
  std::vector<HubschConeReport> cones;
  CoarsenResult coarsening;
  bool stars_rigid = true;
  /// The input is already a coarsen fixpoint; otherwise minimality is undetermined.
  bool input_is_fixpoint = true;
  HubschVerdict verdict = HubschVerdict::Pass;
};

/// Star rigidity in N / span(sigma) for every cone, plus the coarsen fixpoint status.
HubschReport hubsch_check(const Fan& fan);

std::string to_string(HubschVerdict v);

}  // namespace tropkit
