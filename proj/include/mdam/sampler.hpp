#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdam/compiled_model.hpp"
#include "mdam/data.hpp"
#include "mdam/model_spec.hpp"
#include "mdam/rng.hpp"

namespace mdam {

struct ParameterState {
  // Per model in SequenceSpec::models() order. A saturated head holds its
  // cell probabilities; every other model its coefficients (cutpoints first).
  std::vector<std::vector<double>> params;
  std::vector<std::vector<double>> scales;  // proposal scales; empty for a head
};

struct ChainConfig {
  std::size_t iterations = 10000;
  std::size_t burn_in = 5000;
  std::size_t thin = 1;
  std::uint64_t seed = 1;
  std::size_t chains = 1;
  std::size_t adaptation_window = 50;
  double target_acceptance = 0.35;
  double initial_scale = 0.1;
  // Standard deviation of an independent normal prior on every coefficient;
  // 0 keeps the flat prior.
  double prior_sd = 0.0;
  std::size_t max_threads = 0;      // 0: MDAM_THREADS or hardware concurrency
  bool force = false;               // run even when not identified
  bool retain_allocations = false;  // keep every retained completed dataset

  void validate() const;
  std::size_t retained() const { return (iterations - burn_in + thin - 1) / thin; }
};

/// Records sharing observed values, indicators and origin. They share one
/// conditional distribution over their missing values, so imputation draws
/// a multinomial allocation of the group over completions.
struct RecordGroup {
  std::vector<Level> values;  // kMissing where unobserved
  std::vector<Flag> item;
  Flag unit = Flag::Zero;
  Origin origin = Origin::Real;
  std::vector<std::size_t> members;  // record indices in the dataset
  std::vector<std::size_t> missing;  // variables to impute
  std::size_t completions = 1;
  int record_class = -1;  // 0 unit nonrespondents, >0 respondent pattern, -1 synthetic
  // slots[c * models + m]: table slot of completion c in model m, or npos
  // when the model does not apply.
  std::vector<std::size_t> slots;
  std::vector<std::size_t> joint_cells;  // per completion, full joint index
  bool stratum_missing = false;
  std::vector<std::size_t> stratum_cells;  // per completion, when stratum_missing

  std::size_t size() const { return members.size(); }
};

inline constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);

/// Compiled sequence over a fixed (augmented) dataset; immutable and shared
/// read-only by every chain.
class CompiledSequence {
 public:
  CompiledSequence(SequenceSpec spec, const SurveyDataset& data);

  const SequenceSpec& spec() const { return spec_; }
  const VariableSchema& schema() const { return schema_; }
  const std::vector<CompiledModel>& models() const { return models_; }
  const std::vector<RecordGroup>& groups() const { return groups_; }
  std::size_t record_count() const { return records_; }
  /// Record classes: index 0 is unit nonrespondents, then respondent
  /// indicator patterns.
  const std::vector<std::vector<Flag>>& classes() const { return classes_; }
  std::optional<std::size_t> head_model() const { return head_; }

  /// Completed values of completion `c` of group `g`.
  std::vector<Level> completion_values(const RecordGroup& g, std::size_t c) const;
  /// Log probability tables of every model under `state`.
  std::vector<std::vector<double>> log_tables(const ParameterState& state) const;
  /// Log weight of a completed record of the given type (survey block, U and
  /// applicable indicator terms).
  double record_log_weight(const std::vector<std::vector<double>>& tables,
                           const std::vector<Level>& values, const std::vector<Flag>& item, Flag unit,
                           Origin origin) const;
  /// Log empirical share of the always-observed cell of `values`.
  double stratum_log_share(const std::vector<Level>& values) const;

  std::vector<std::string> coefficient_names() const;
  std::vector<std::string> head_names() const;

 private:
  SequenceSpec spec_;
  VariableSchema schema_;
  std::vector<CompiledModel> models_;
  std::vector<RecordGroup> groups_;
  std::vector<std::vector<Flag>> classes_;
  std::optional<std::size_t> head_;
  std::size_t records_ = 0;
  std::vector<std::size_t> stratum_vars_;
  std::vector<double> stratum_log_share_;
};

struct ChainState {
  ParameterState params;
  std::vector<std::vector<std::uint32_t>> allocation;  // per group, per completion
};

/// Missing values from respondent marginals, coefficients at zero (cutpoints
/// at empirical cumulative logits), head at the completed-cell distribution.
ChainState init_state(const CompiledSequence& seq, Rng& rng, double initial_scale = 0.1);

/// Conditional distribution of `variable` given the rest of `record`, whose
/// other values are filled. The variable must be unobserved for the record's
/// type.
std::vector<double> full_conditional_for_value(const CompiledSequence& seq,
                                               const SurveyRecord& record, std::size_t variable,
                                               const ParameterState& state);

/// Joint conditional over the completions of group `g`.
std::vector<double> group_conditional(const CompiledSequence& seq, const RecordGroup& g,
                                      const std::vector<std::vector<double>>& tables);

/// Redraws every group's allocation over its completions.
void impute(const CompiledSequence& seq, ChainState& chain, Rng& rng);

/// Per-model slot counts of the completed data.
std::vector<std::vector<double>> model_counts(const CompiledSequence& seq, const ChainState& chain);

/// Dirichlet(1 + counts) draw for the saturated head.
void update_survey_head(const CompiledSequence& seq, ParameterState& state,
                        const std::vector<std::vector<double>>& counts, Rng& rng);

struct MetropolisStats {
  std::vector<std::size_t> accepted;  // per coefficient
  std::vector<std::size_t> proposed;
};

/// Component-wise Gaussian random walk on model `m` under a flat prior, or a
/// N(0, prior_sd^2) prior per coefficient when prior_sd > 0.
MetropolisStats metropolis_update_coeffs(std::size_t m, const CompiledSequence& seq,
                                         ParameterState& state,
                                         const std::vector<std::vector<double>>& counts, Rng& rng,
                                         double prior_sd = 0.0);

/// Complete-data log density of the current state.
double complete_log_density(const CompiledSequence& seq, const ChainState& chain);

struct DrawSet {
  std::vector<std::string> coefficient_names;
  std::vector<std::string> head_names;
  std::size_t chains = 0;
  std::vector<std::size_t> chain;      // per draw
  std::vector<std::size_t> iteration;  // per draw
  std::vector<std::vector<double>> coefficients;
  std::vector<std::vector<double>> head;
  std::vector<double> log_density;
  // Completed-data accumulators over real records: per draw, counts indexed
  // by joint_cell * classes.size() + class.
  std::size_t joint_cells = 0;
  std::vector<std::vector<Flag>> classes;
  std::vector<std::vector<std::uint32_t>> cell_counts;
  // Per chain, per coefficient.
  std::vector<std::vector<double>> acceptance;
  std::vector<std::vector<double>> scales;
  // Per draw when retained, else only the last draw of each chain.
  std::vector<std::vector<std::vector<std::uint32_t>>> allocations;

  std::size_t size() const { return iteration.size(); }
  /// Values of coefficient (or head cell, after all coefficients) `j`.
  std::vector<double> series(std::size_t j, std::optional<std::size_t> only_chain = {}) const;
  std::vector<std::string> parameter_names() const;
  ParameterState state(std::size_t draw, const CompiledSequence& seq) const;
};

DrawSet merge_draws(std::vector<DrawSet> parts);

DrawSet run_chain(const CompiledSequence& seq, const ChainConfig& config, std::size_t chain_index = 0);

/// Validates and identification-checks the spec, then runs config.chains
/// chains in parallel and merges them. Throws IdentificationError when the
/// spec is overparameterized and config.force is false.
DrawSet run_chains(const SequenceSpec& spec, const SurveyDataset& augmented,
                   const std::vector<AuxiliaryMargin>& margins, const ChainConfig& config);

/// Real and synthetic records with imputed values from one allocation.
std::vector<SurveyRecord> completed_records(const CompiledSequence& seq, const SurveyDataset& data,
                                            const std::vector<std::vector<std::uint32_t>>& allocation);

}  // namespace mdam
