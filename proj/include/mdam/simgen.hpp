#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdam/data.hpp"
#include "mdam/model_spec.hpp"
#include "mdam/rng.hpp"

namespace mdam {

//---------------------------------------------------------------------------//
// Two-binary scenario
//---------------------------------------------------------------------------//

/// Generating values for one of the two-binary named models. Coefficient
/// vectors follow the named model's term order.
struct ScenarioTruth {
  std::array<double, 4> joint{0.25, 0.25, 0.25, 0.25};  // (X1,X2) = 00, 01, 10, 11
  std::string mechanism = "MCAR+ICIN";
  std::vector<double> eta{0.0};          // U
  std::vector<double> zeta{0.0, 0.0};    // R1
  std::vector<double> gamma{0.0, 0.0};   // R2

  /// Throws SpecError on a bad joint or dimension mismatch.
  void validate() const;
};

struct JointTable {
  // Indexed by index(x1, x2, r1, r2, u).
  std::array<double, 32> prob{};
  double p = 0, s0 = 0, q00 = 0, q10 = 0, pi000 = 0, pi100 = 0, theta0000 = 0, theta1000 = 0;
  double margin_x1 = 0, margin_x2 = 0;

  static constexpr std::size_t index(int x1, int x2, int r1, int r2, int u) {
    return static_cast<std::size_t>(x1 * 16 + x2 * 8 + r1 * 4 + r2 * 2 + u);
  }
  /// (p, s0, q00, q10, pi000, pi100, theta0000, theta1000).
  std::array<double, 8> observed() const {
    return {p, s0, q00, q10, pi000, pi100, theta0000, theta1000};
  }
};

/// Exact joint over (X1, X2, R1, R2, U). Indicator models apply whatever U
/// is; for U = 1 they only split mass that is never observed.
JointTable enumerate_joint(const ScenarioTruth& truth);
std::pair<double, double> implied_margins(const ScenarioTruth& truth);

/// n i.i.d. records; unit nonrespondents and item-missing values blanked.
SurveyDataset generate_scenario(const ScenarioTruth& truth, std::size_t n, std::uint64_t seed);

/// Truth with random joint and standard normal coefficients.
ScenarioTruth random_scenario_truth(const std::string& mechanism, Rng& rng);

/// Oracle margins (Pr(X1 = 1), Pr(X2 = 1)) as exact AuxiliaryMargins.
std::vector<AuxiliaryMargin> scenario_margins(const ScenarioTruth& truth, double multiplier = 3.0);

/// Per-model parameters of named_model(truth.mechanism) holding the truth.
std::vector<std::vector<double>> scenario_parameters(const ScenarioTruth& truth);

//---------------------------------------------------------------------------//
// General sequences (CPS-like)
//---------------------------------------------------------------------------//

/// Generating values for a sequence model: per-model parameters in
/// SequenceSpec::models() order and record counts per level of the
/// stratum (the single always-observed variable, if any).
struct SequenceTruth {
  std::string model;
  std::vector<std::vector<double>> params;
  std::vector<std::size_t> stratum_sizes;
};

/// Exact distribution over the joint cells of the schema, strata weighted by
/// their sizes.
std::vector<double> exact_joint(const SequenceSpec& spec, const VariableSchema& schema,
                                const SequenceTruth& truth);

/// Exact unit and item nonresponse rates per stratum level.
RateTable exact_rates(const SequenceSpec& spec, const VariableSchema& schema,
                      const SequenceTruth& truth);

/// Population share of `target` within `subgroup` under the truth.
double exact_estimand(const SequenceSpec& spec, const VariableSchema& schema,
                      const SequenceTruth& truth, const Target& target,
                      const Predicate& subgroup = {});

/// Share of `target` among complete cases (respondents with every item
/// observed) within `subgroup`.
double exact_complete_case(const SequenceSpec& spec, const VariableSchema& schema,
                           const SequenceTruth& truth, const Target& target,
                           const Predicate& subgroup = {});

/// Share of `target` among unit nonrespondents (`unit`) or among
/// respondents missing the target variable, within `subgroup`.
double exact_nonrespondent_share(const SequenceSpec& spec, const VariableSchema& schema,
                                 const SequenceTruth& truth, bool unit, const Target& target,
                                 const Predicate& subgroup = {});

/// Share of `target` among respondents who report the target variable,
/// within `subgroup`.
double exact_available_case(const SequenceSpec& spec, const VariableSchema& schema,
                            const SequenceTruth& truth, const Target& target,
                            const Predicate& subgroup = {});

/// Exact margins of every margin-role variable, stratified by the stratum
/// variable when there is one.
std::vector<AuxiliaryMargin> exact_margins(const SequenceSpec& spec, const VariableSchema& schema,
                                           const SequenceTruth& truth, double multiplier = 3.0);

/// Simulates the full sequence (survey values, U, indicators with monotone
/// parents) and blanks what is unobserved.
SurveyDataset simulate_sequence(const SequenceSpec& spec, const VariableSchema& schema,
                                const SequenceTruth& truth, Rng& rng);

struct CpsLikeData {
  SurveyDataset data;
  std::vector<AuxiliaryMargin> margins;
};

/// CPS-like extract under an MD-R or MD-U truth, with its exact margins.
CpsLikeData generate_cps_like(const SequenceTruth& truth, std::uint64_t seed);

/// Per-model parameters from "model:coefficient" values; missing names are
/// zero, head cells (if any) uniform. Throws SpecError on unknown names.
std::vector<std::vector<double>> parameters_from_names(const SequenceSpec& spec,
                                                       const VariableSchema& schema,
                                                       const std::map<std::string, double>& values);

}  // namespace mdam
