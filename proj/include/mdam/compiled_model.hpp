#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdam/data.hpp"
#include "mdam/model_spec.hpp"

namespace mdam {

/// log σ(x), stable for large |x|.
double log_sigmoid(double x);
/// log(σ(hi) − σ(lo)) for hi > lo.
double log_sigmoid_diff(double hi, double lo);

/// A conditional model reduced to a table over the joint cells of the
/// variables it references.
class CompiledModel {
 public:
  CompiledModel(const ConditionalModelSpec& spec, const VariableSchema& schema);

  const ConditionalModelSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  OutcomeKind kind() const { return spec_.kind; }

  /// Schema indices of the conditioning variables (head: outcome variables).
  const std::vector<std::size_t>& variables() const { return vars_; }
  std::size_t cells() const { return cells_; }
  /// Outcome categories per cell (1 for a saturated head).
  std::size_t outcomes() const { return outcomes_; }
  std::size_t table_size() const { return cells_ * outcomes_; }
  /// Survey outcome or indicator variable; absent for heads and U.
  std::optional<std::size_t> outcome_variable() const { return outcome_; }
  std::optional<std::size_t> parent_variable() const { return parent_; }
  std::size_t dimension() const { return dim_; }
  std::size_t cutpoints() const { return spec_.predictor.cutpoints; }

  std::size_t cell_of(const std::vector<Level>& values) const;
  /// Table slot for completed `values` and outcome `y` (the survey level, or
  /// the indicator value for U and item models).
  std::size_t slot(const std::vector<Level>& values, int y) const {
    return cell_of(values) * outcomes_ + static_cast<std::size_t>(y);
  }
  /// Values with only this model's variables set, for cell `c`.
  std::vector<Level> cell_values(std::size_t c) const;

  /// Log probabilities for every slot. For a head, `params` are the cell
  /// probabilities; otherwise the coefficients (cutpoints first).
  void log_probs(std::span<const double> params, std::vector<double>& out) const;
  /// Σ counts · log probabilities; -inf outside the support.
  double log_likelihood(std::span<const double> params, std::span<const double> counts) const;

 private:
  ConditionalModelSpec spec_;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> vars_;
  std::vector<std::size_t> radix_;
  std::size_t cells_ = 1;
  std::size_t outcomes_ = 1;
  std::optional<std::size_t> outcome_;
  std::optional<std::size_t> parent_;
  std::size_t dim_ = 0;
  std::size_t cols_ = 0;  // design columns, excluding cutpoints
  std::vector<double> design_;
};

}  // namespace mdam
