#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permpoly/face.hpp"
#include "permpoly/perm_group.hpp"
#include "permpoly/set_partition.hpp"

namespace permpoly {

/// Both face verdicts for one subgroup H of G.
struct SubgroupRecord {
  std::size_t order = 0;
  std::vector<Permutation> generators;
  SetPartition orbit_partition;
  std::size_t stabilizer_order = 0;  // |stab(G; orbit partition of H)|
  bool combinatorial = false;
  bool geometric = false;
  std::optional<FaceCertificate> certificate;  // from the LP, when geometric

  bool operator==(const SubgroupRecord&) const = default;
};

struct TheoremReport {
  std::string group;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::size_t subgroup_count = 0;
  std::size_t face_subgroup_count = 0;
  bool agreement = true;
  std::vector<SubgroupRecord> records;

  bool operator==(const TheoremReport&) const = default;
};

struct TheoremOptions {
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  std::size_t lp_row_cap = kDefaultLpRowCap;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Runs the combinatorial and LP face tests on every subgroup of G.
///
/// For each H the intermediate facts behind the face criterion are checked as
/// well: H' = stab(G; orbits of H) contains H, has the same orbit partition and
/// the same barycenter. A failure there is a logic error, not a disagreement.
/// Records come out in canonical subgroup order regardless of scheduling.
TheoremReport verify_theorem(const PermGroup& group, std::string description,
                             const TheoremOptions& options = {});

nlohmann::json to_json(const TheoremReport& report);

/// Inverse of to_json. Throws ParseError on schema violations.
TheoremReport report_from_json(const nlohmann::json& j);

}  // namespace permpoly
