#pragma once

#include "thhcalc/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thhcalc {

struct ScenarioInfo {
  std::string name;
  std::string title;    // the computation being reproduced
  std::string summary;  // what the pipeline checks
};

const std::vector<ScenarioInfo>& scenario_catalog();

/// 2p^2 + 4p: every declared differential fires at least twice below it.
int default_cap(std::uint32_t p);

/// Runs one catalog scenario. Throws UnknownScenario or InvalidPrime.
/// A cap below 2p^2 adds a CapTooSmall warning and downgrades passes to
/// conditional, since the differential ranges are then vacuous.
Report run_scenario(std::string_view name, std::uint32_t p, std::optional<int> cap = std::nullopt);

/// Adds the CapTooSmall warning and downgrades passes when cap < 2p^2.
void apply_cap_policy(Report& report);

/// Every catalog scenario, concurrently, in catalog order.
std::vector<Report> run_all(std::uint32_t p, std::optional<int> cap = std::nullopt);

/// Runs a user scenario given in the structured text schema; `p` and `cap`
/// override the values stored in the document.
Report run_scenario_file(std::string_view text, std::optional<std::uint32_t> p = std::nullopt,
                         std::optional<int> cap = std::nullopt);

}  // namespace thhcalc
