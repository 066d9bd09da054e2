#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdam/data.hpp"
#include "mdam/model_spec.hpp"
#include "mdam/sampler.hpp"
#include "mdam/simgen.hpp"

namespace mdam {

struct DatasetSource {
  std::filesystem::path path;
  LoadOptions options;
};

/// What `simulate` draws from: a two-binary scenario truth or a sequence
/// truth fixture.
struct SimulationSpec {
  std::optional<ScenarioTruth> scenario;
  std::size_t n = 0;  // scenario only
  std::optional<SequenceTruth> sequence;
  double margin_multiplier = 3.0;
};

struct SummarySpec {
  std::string target;                   // e.g. "V=Voted"
  std::vector<std::string> subgroups;   // predicate strings; "" is everyone
  std::vector<std::string> grid;        // stratum, then crossed variables
  std::optional<std::string> by;        // nonrespondent breakdown
  std::optional<std::filesystem::path> benchmark;
};

struct RunConfig {
  std::filesystem::path source;  // config file, empty when parsed from text
  std::string text;              // raw config, hashed into manifests
  VariableSchema schema;
  std::optional<DatasetSource> data;
  std::optional<std::string> named_model;
  std::optional<SequenceSpec> inline_model;
  std::vector<AuxiliaryMargin> margins;
  ChainConfig chain;
  std::filesystem::path out_dir = "out";
  std::optional<SimulationSpec> simulate;
  SummarySpec summary;

  /// The named or inline model. Throws SpecError when neither is set.
  SequenceSpec model() const;
};

/// Parses YAML text. Relative paths resolve against `base_dir`. Throws
/// SpecError on malformed content and IoError when a referenced file is
/// missing.
RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_run_config(const std::filesystem::path& path);

/// Predictor term from "1", "A", "S:A" or "A{l1|l2}".
Term parse_term(const std::string& text);
std::string format_term(const Term& t);

std::vector<AuxiliaryMargin> parse_margins(const std::string& yaml, const VariableSchema& schema);
std::string format_margins(const std::vector<AuxiliaryMargin>& margins, const VariableSchema& schema);

/// Sequence truth fixture: model name, per-stratum sizes and coefficients
/// keyed "model:coefficient".
SequenceTruth parse_truth(const std::string& yaml, const VariableSchema& schema);
SequenceTruth load_truth(const std::filesystem::path& path, const VariableSchema& schema);
std::string format_truth(const SequenceTruth& truth, const VariableSchema& schema,
                         const std::vector<std::string>& comments = {});

ScenarioTruth parse_scenario_truth(const std::string& yaml);
std::string format_scenario_truth(const ScenarioTruth& truth);

std::string format_schema(const VariableSchema& schema);

/// Reads a whole file; throws IoError.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace mdam
