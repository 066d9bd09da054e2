#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdam/data.hpp"
#include "mdam/sampler.hpp"

namespace mdam {

/// Empirical quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

struct EstimandSummary {
  std::string label;
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> draws;
  std::size_t excluded = 0;  // draws where the subgroup was empty
};

/// Share of `target` among real records in `subgroup`, per retained draw.
EstimandSummary estimand_summary(const DrawSet& draws, const VariableSchema& schema,
                                 const Target& target, const Predicate& subgroup = {});

EstimandSummary summarize_draws(std::string label, std::vector<double> values);

struct CellCheck {
  std::size_t cell = 0;  // VariableSchema::joint_index
  std::string label;
  double observed = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool covered = false;
};

struct CellCheckReport {
  std::vector<CellCheck> cells;
  double coverage_rate = 0.0;
  std::size_t replicates = 0;
};

/// 95% posterior predictive intervals for the fully-observed cell
/// proportions. Replicates keep the real records' always-observed strata and
/// draw fully-observed counts per stratum from the model.
CellCheckReport posterior_predictive_cells(const DrawSet& draws, const CompiledSequence& seq,
                                           const SurveyDataset& data,
                                           std::size_t replicates_per_draw = 1,
                                           std::size_t max_draws = 500, std::uint64_t seed = 1);

enum class NonrespondentClass { Item, Unit };

struct NonrespondentPrediction {
  std::string group;  // stratum level or "all"
  std::size_t records = 0;
  EstimandSummary share;
};

/// Per-draw share of `target` among item (target variable missing) or unit
/// nonrespondents, overall and by the levels of `by`.
std::vector<NonrespondentPrediction> nonrespondent_prediction(
    const DrawSet& draws, const VariableSchema& schema, NonrespondentClass cls, const Target& target,
    const std::optional<std::string>& by = std::nullopt);

struct ParameterDiagnostics {
  std::string name;
  std::optional<double> ess;   // absent for a constant parameter
  std::optional<double> rhat;  // split-chain statistic
  bool flagged = false;        // rhat above 1.05
};

/// Autocorrelation-based effective sample size pooled over chains.
std::optional<double> effective_sample_size(const std::vector<std::vector<double>>& chains);
/// Split-chain potential scale reduction.
std::optional<double> split_rhat(const std::vector<std::vector<double>>& chains);

std::vector<ParameterDiagnostics> chain_diagnostics(const DrawSet& draws);

/// Deviation of the posterior composition of `composition` among records
/// with `among` from an external benchmark keyed by (group, level label).
struct CompositionDeviation {
  std::string group;
  std::string level;
  double benchmark = 0.0;
  EstimandSummary deviation;
};

std::vector<CompositionDeviation> composition_deviation(
    const DrawSet& draws, const VariableSchema& schema, const Target& among,
    std::size_t composition, const std::optional<std::string>& by,
    const std::map<std::pair<std::string, std::string>, double>& benchmark);

/// Records whose child indicator is observed while a monotone parent is
/// missing, counted over every retained draw's record classes.
std::size_t monotone_violations(const DrawSet& draws, const SequenceSpec& spec,
                                const VariableSchema& schema);

}  // namespace mdam
