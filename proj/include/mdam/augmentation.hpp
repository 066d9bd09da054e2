#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdam/data.hpp"

namespace mdam {

/// Synthetic records for one margin (one per stratum level when the margin
/// is stratified).
struct SyntheticBlock {
  std::string variable;
  std::optional<std::string> by;
  std::optional<Level> stratum;
  std::size_t size = 0;
  std::vector<std::size_t> target_counts;  // per level
};

/// Largest-remainder apportionment of `total` over `probabilities`; ties go
/// to the lower level index.
std::vector<std::size_t> apportion(const std::vector<double>& probabilities, std::size_t total);

/// Smallest multiplier m with m·n records giving a binomial standard error
/// at most `target_se` at the margin's most uncertain level.
double multiplier_for_se(const AuxiliaryMargin& margin, double target_se, std::size_t n);

/// The margin's multiplier, or the one implied by its target_se.
double effective_multiplier(const AuxiliaryMargin& margin, std::size_t n);

/// Block layout for `d` without building records.
std::vector<SyntheticBlock> synthetic_blocks(const SurveyDataset& d,
                                             const std::vector<AuxiliaryMargin>& margins);

/// Copy of `d` (synthetic records dropped) followed by one block per margin.
/// A stratified block observes its stratum variable as well.
SurveyDataset augment(const SurveyDataset& d, const std::vector<AuxiliaryMargin>& margins);

}  // namespace mdam
