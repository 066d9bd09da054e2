#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdam {

/// Whether a survey variable has an auxiliary margin (X) or not (Y).
enum class Role { Margin, NoMargin };

struct CategoricalVariable {
  std::string name;
  std::vector<std::string> levels;
  Role role = Role::NoMargin;
  bool ordinal = false;
  // Observed on every real record, unit nonrespondents included (e.g. the
  // sampling stratum). Such variables carry no nonresponse indicator and
  // are conditioned on rather than modeled.
  bool always_observed = false;

  std::size_t size() const { return levels.size(); }
  /// Index of `label`, or -1.
  int level_index(std::string_view label) const;
};

class VariableSchema {
 public:
  VariableSchema() = default;
  explicit VariableSchema(std::vector<CategoricalVariable> variables);

  const std::vector<CategoricalVariable>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const CategoricalVariable& operator[](std::size_t i) const { return vars_[i]; }

  /// Index of the named variable, or -1.
  int index_of(std::string_view name) const;
  /// Index of the named variable; throws SpecError if absent.
  std::size_t require(std::string_view name) const;
  const CategoricalVariable& variable(std::string_view name) const {
    return vars_[require(name)];
  }

  /// Number of joint cells over all variables.
  std::size_t joint_cells() const;
  /// Mixed-radix index over all variables; first variable varies slowest.
  std::size_t joint_index(const std::vector<std::int16_t>& values) const;
  std::vector<std::int16_t> joint_values(std::size_t index) const;

 private:
  std::vector<CategoricalVariable> vars_;
};

using Level = std::int16_t;
inline constexpr Level kMissing = -1;

/// Tri-state nonresponse flag.
enum class Flag : std::int8_t { Zero = 0, One = 1, Unknown = -1 };

enum class Origin : std::uint8_t { Real, Synthetic };

struct SurveyRecord {
  std::vector<Level> values;
  std::vector<Flag> item;  // R^x / R^y per variable
  Flag unit = Flag::Zero;  // U
  Origin origin = Origin::Real;

  bool is_respondent() const {
    return origin == Origin::Real && unit == Flag::Zero;
  }
  bool is_unit_nonrespondent() const {
    return origin == Origin::Real && unit == Flag::One;
  }
  bool is_synthetic() const { return origin == Origin::Synthetic; }
};

/// Throws DataError when `r` breaks a record invariant.
void check_record(const VariableSchema& schema, const SurveyRecord& r);

struct AuxiliaryMargin {
  std::string variable;
  // Optional always-observed stratum; one probability row per stratum level.
  std::optional<std::string> by;
  std::vector<std::vector<double>> probabilities;
  bool treated_as_exact = true;
  double multiplier = 3.0;
  std::optional<double> target_se;

  /// Throws SpecError when probabilities are malformed for `schema`.
  void validate(const VariableSchema& schema) const;
};

/// Column layout of the delimited file a dataset was read from.
struct FileLayout {
  std::vector<std::string> columns;
  std::optional<std::string> unit_column;
  char delimiter = ',';
  std::string missing_code = "NA";
};

class SurveyDataset {
 public:
  SurveyDataset() = default;
  explicit SurveyDataset(VariableSchema schema) : schema_(std::move(schema)) {}

  const VariableSchema& schema() const { return schema_; }
  const std::vector<SurveyRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  std::size_t real_count() const;
  std::size_t synthetic_count() const { return size() - real_count(); }

  /// Appends a record after checking invariants. Real records may not follow
  /// synthetic ones.
  void add(SurveyRecord r);
  /// Copy with synthetic records dropped.
  SurveyDataset without_synthetic() const;

  FileLayout layout;

 private:
  VariableSchema schema_;
  std::vector<SurveyRecord> records_;
};

/// How unit nonrespondents are represented in the source file.
struct UnitRowRule {
  enum class Mode { None, Column, Counts };
  Mode mode = Mode::None;
  std::string column = "U";
  // Counts mode: stratum variable and number of unit rows per stratum level.
  std::string by;
  std::map<std::string, long long> counts;
};

struct LoadOptions {
  std::string missing_code = "NA";
  char delimiter = ',';
  UnitRowRule unit_rule;
  // Respondents with every non-stratum variable missing become unit rows.
  bool all_missing_as_unit = false;
};

/// Reads a delimited file with a header naming schema variables. Optional
/// columns `R_<var>` carry item indicators and are checked against values.
SurveyDataset load_dataset(const std::string& path, const VariableSchema& schema,
                           const LoadOptions& options = {});
SurveyDataset parse_dataset(std::string_view text, const VariableSchema& schema,
                            const LoadOptions& options = {});

/// Writes real records in `d.layout` format (or a default layout).
void write_dataset(const std::string& path, const SurveyDataset& d,
                   bool include_indicators = false);
std::string format_dataset(const SurveyDataset& d, bool include_indicators = false);

//---------------------------------------------------------------------------//
// Descriptive statistics
//---------------------------------------------------------------------------//

struct RateRow {
  std::string group;  // level label, or "all"
  std::size_t total = 0;
  std::size_t unit = 0;
  std::size_t respondents = 0;
  double unit_rate = 0.0;
  // Per variable: missing among respondents / respondents. Empty optional
  // when the group has no respondents.
  std::vector<std::optional<double>> item_rates;
};

struct RateTable {
  std::vector<std::string> variables;
  std::vector<RateRow> rows;
};

RateTable nonresponse_rates(const SurveyDataset& d,
                            const std::optional<std::string>& by = std::nullopt);

/// Conjunction of `variable in {levels}` conditions.
class Predicate {
 public:
  Predicate() = default;
  /// Parses `A=x|y&B=z`; empty text is the always-true predicate.
  static Predicate parse(std::string_view text, const VariableSchema& schema);

  void add(std::size_t variable, std::vector<Level> levels);
  bool matches(const std::vector<Level>& values) const;
  bool empty() const { return terms_.empty(); }
  std::string label(const VariableSchema& schema) const;
  const std::vector<std::pair<std::size_t, std::vector<Level>>>& terms() const {
    return terms_;
  }

 private:
  std::vector<std::pair<std::size_t, std::vector<Level>>> terms_;
};

/// `variable=level`.
struct Target {
  std::size_t variable = 0;
  Level level = 0;
  static Target parse(std::string_view text, const VariableSchema& schema);
  std::string label(const VariableSchema& schema) const;
};

double complete_case_estimate(const SurveyDataset& d, const Target& target,
                              const Predicate& subgroup = {});

struct ObservedCellTable {
  std::vector<std::size_t> counts;  // indexed by VariableSchema::joint_index
  std::vector<double> proportions;
  std::size_t total = 0;
};

ObservedCellTable observed_cell_table(const SurveyDataset& d);

}  // namespace mdam
