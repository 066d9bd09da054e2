#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdam/data.hpp"
#include "mdam/model_spec.hpp"

namespace mdam {

/// Which variables are jointly observed among respondents.
struct MissingnessPattern {
  std::vector<Flag> item;  // per variable; Zero for always-observed variables
  std::size_t count = 0;

  bool observed(std::size_t variable) const { return item[variable] == Flag::Zero; }
};

struct MissingnessSummary {
  std::vector<MissingnessPattern> respondent_patterns;
  std::size_t unit_rows = 0;

  /// Distinct respondent patterns of the real records in `d`.
  static MissingnessSummary from_dataset(const SurveyDataset& d);
  /// Every indicator combination the sequence permits (monotone parents
  /// respected), as if each had been seen.
  static MissingnessSummary structural(const SequenceSpec& spec, const VariableSchema& schema);
};

enum class Observability { ObservableTogether, MarginFunded, Unfunded };
std::string to_string(Observability o);

struct CoefficientClass {
  std::string model;        // model label, e.g. "R_V"
  std::string group;        // term label
  std::string coefficient;  // full coefficient name
  Observability classification = Observability::ObservableTogether;
  std::optional<std::string> funded_by;  // margin variable, when funded
};

struct IdentificationReport {
  std::size_t free_parameters = 0;
  std::size_t observed_budget = 0;
  std::size_t margin_budget = 0;
  std::size_t margin_funded = 0;
  std::vector<CoefficientClass> per_coefficient;
  std::vector<std::string> warnings;

  std::size_t unfunded() const;
  bool identified() const;
  std::string verdict() const { return identified() ? "identified" : "overparameterized"; }
  /// Human-readable report.
  std::string format() const;
};

IdentificationReport count_identification(const SequenceSpec& spec, const VariableSchema& schema,
                                          const std::vector<AuxiliaryMargin>& margins,
                                          const MissingnessSummary& summary);

}  // namespace mdam
