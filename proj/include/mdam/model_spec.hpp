#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdam/data.hpp"

namespace mdam {

enum class TermKind { Intercept, Main, Interaction, LevelSet };

/// One additive block of a linear predictor. Main effects and interactions
/// are dummy coded against the first schema level.
struct Term {
  TermKind kind = TermKind::Intercept;
  std::string a;
  std::string b;
  std::vector<std::string> levels;  // LevelSet only
  std::string group;                // coefficient-group identifier

  static Term intercept();
  static Term main(std::string variable);
  static Term interaction(std::string first, std::string second);
  static Term level_set(std::string variable, std::vector<std::string> levels,
                        std::string group = {});

  /// Group identifier, defaulting to a label derived from the variables.
  std::string label() const;
  std::vector<std::string> variables() const;
  std::size_t dimension(const VariableSchema& schema) const;
};

struct LinearPredictorSpec {
  std::vector<Term> terms;
  std::size_t cutpoints = 0;  // proportional-odds outcomes only

  std::size_t dimension(const VariableSchema& schema) const;
  bool has_intercept() const;
  std::vector<std::string> variables() const;
  std::vector<std::string> coefficient_names(const VariableSchema& schema) const;
  /// Dummy-expanded design row (without cutpoints) for completed `values`.
  std::vector<double> design_row(const VariableSchema& schema,
                                 const std::vector<Level>& values) const;
};

enum class Family { SaturatedMultinomial, BernoulliLogit, ProportionalOddsLogit };
enum class OutcomeKind { Survey, Unit, Item };
enum class Mechanism { Unspecified, MCAR, CMAR, ICIN, AN };

std::string to_string(Family f);
std::string to_string(Mechanism m);
Family family_from_string(const std::string& s);
Mechanism mechanism_from_string(const std::string& s);

struct ConditionalModelSpec {
  OutcomeKind kind = OutcomeKind::Survey;
  // Survey: outcome variable(s), several only for a saturated head.
  // Item: the variable whose nonresponse indicator is modeled. Unit: empty.
  std::vector<std::string> outcome;
  Family family = Family::BernoulliLogit;
  LinearPredictorSpec predictor;
  // Item models: indicator of this variable forces the outcome indicator to 1.
  std::optional<std::string> monotone_parent;
  Mechanism mechanism = Mechanism::Unspecified;

  /// Short label used in coefficient names: the variable, "U", or "R_<var>".
  std::string label() const;
  /// Number of free parameters (cell probabilities minus one for a head).
  std::size_t dimension(const VariableSchema& schema) const;
};

struct SequenceSpec {
  std::string name;
  std::vector<ConditionalModelSpec> survey;
  ConditionalModelSpec unit;
  std::vector<ConditionalModelSpec> items;
  // Margin variables whose extra terms go to the unit model.
  std::vector<std::string> margin_allocation;

  /// Survey models, then the unit model, then item models.
  std::vector<const ConditionalModelSpec*> models() const;
  const ConditionalModelSpec* item_model(const std::string& variable) const;
  std::size_t free_parameters(const VariableSchema& schema) const;
};

/// Stable names of the regression coefficients of every non-saturated
/// model, in the sampler's layout order ("<model>:<term>").
std::vector<std::string> coefficient_names(const SequenceSpec& spec, const VariableSchema& schema);
/// Names of the saturated head cells ("head[X1=0,X2=1]"); empty without a head.
std::vector<std::string> head_cell_names(const SequenceSpec& spec, const VariableSchema& schema);

//---------------------------------------------------------------------------//
// Named specifications
//---------------------------------------------------------------------------//

/// Two binary margin variables X1, X2 with levels "0", "1".
VariableSchema scenario_schema();
/// State (always observed), sex, age (ordinal), vote.
VariableSchema cps_schema();

/// MCAR+ICIN, AN-R, AN-U, AN-Rx1, AN-Rx2 (two binary variables) or
/// MD-R, MD-U (stratum, binary, ordinal, binary). Throws SpecError on a
/// schema mismatch or unknown name.
SequenceSpec named_model(const std::string& name, const VariableSchema& schema);
std::vector<std::string> named_model_names();

//---------------------------------------------------------------------------//
// Validation and evaluation
//---------------------------------------------------------------------------//

struct ValidationResult {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
  /// Throws SpecError listing every error.
  void require() const;
};

/// `missing_counts`, when given, holds per-variable missing counts among real
/// records and enables the least-to-most-missing ordering warning.
ValidationResult validate_sequence(const SequenceSpec& spec, const VariableSchema& schema,
                                   const std::vector<AuxiliaryMargin>& margins,
                                   const std::vector<std::size_t>* missing_counts = nullptr);

/// Margin variables appearing as unit-model predictors.
std::vector<std::string> derive_margin_allocation(const SequenceSpec& spec,
                                                  const VariableSchema& schema,
                                                  const std::vector<AuxiliaryMargin>& margins);

/// Intercept plus dummy-expanded terms. For proportional-odds predictors
/// `coeffs` starts with the cutpoints and `cutpoint` selects the cumulative
/// logit to return.
double linear_predictor(const LinearPredictorSpec& spec, const VariableSchema& schema,
                        std::span<const double> coeffs, const std::vector<Level>& values,
                        std::optional<std::size_t> cutpoint = std::nullopt);
double linear_predictor(const LinearPredictorSpec& spec, const VariableSchema& schema,
                        std::span<const double> coeffs, const SurveyRecord& record,
                        std::optional<std::size_t> cutpoint = std::nullopt);

}  // namespace mdam
