#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "mdam/augmentation.hpp"
#include "mdam/config.hpp"
#include "mdam/diagnostics.hpp"
#include "mdam/error.hpp"
#include "mdam/identification.hpp"
#include "mdam/sampler.hpp"
#include "mdam/simgen.hpp"

namespace py = pybind11;
using namespace mdam;

namespace {

struct Fit {
  VariableSchema schema;
  DrawSet draws;
};

ScenarioTruth scenario(const std::string& mechanism, const std::vector<double>& joint,
                       const std::vector<double>& eta, const std::vector<double>& zeta,
                       const std::vector<double>& gamma) {
  if (joint.size() != 4) throw SpecError("joint needs 4 cells (X1,X2 = 00, 01, 10, 11)");
  ScenarioTruth t;
  t.mechanism = mechanism;
  std::copy(joint.begin(), joint.end(), t.joint.begin());
  t.eta = eta;
  t.zeta = zeta;
  t.gamma = gamma;
  t.validate();
  return t;
}

Fit run(const SequenceSpec& spec, const SurveyDataset& data, const std::vector<AuxiliaryMargin>& margins,
        const ChainConfig& chain) {
  DrawSet draws;
  {
    py::gil_scoped_release release;
    draws = run_chains(spec, augment(data, margins), margins, chain);
  }
  return {data.schema(), std::move(draws)};
}

py::dict summary_dict(const EstimandSummary& s) {
  py::dict d;
  d["mean"] = s.mean;
  d["lo"] = s.lo;
  d["hi"] = s.hi;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Selection models with auxiliary margins for categorical survey data";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<IdentificationError>(m, "IdentificationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("version", [] { return std::string(MDAM_VERSION); });

  m.def(
      "coefficient_names",
      [](const std::string& model, const std::string& schema) {
        const auto s = schema == "cps" ? cps_schema() : scenario_schema();
        return coefficient_names(named_model(model, s), s);
      },
      py::arg("model"), py::arg("schema") = "scenario");

  m.def(
      "identify",
      [](const std::filesystem::path& config) {
        const auto c = load_run_config(config);
        const auto spec = c.model();
        const auto r = count_identification(spec, c.schema, c.margins, MissingnessSummary::structural(spec, c.schema));
        py::dict d;
        d["free_parameters"] = r.free_parameters;
        d["observed_budget"] = r.observed_budget;
        d["margin_budget"] = r.margin_budget;
        d["unfunded"] = r.unfunded();
        d["verdict"] = r.verdict();
        d["report"] = r.format();
        return d;
      },
      py::arg("config"), "Identification report for a run config.");

  m.def(
      "enumerate_joint",
      [](const std::string& mechanism, const std::vector<double>& joint, const std::vector<double>& eta,
         const std::vector<double>& zeta, const std::vector<double>& gamma) {
        const auto jt = enumerate_joint(scenario(mechanism, joint, eta, zeta, gamma));
        py::dict d;
        d["prob"] = std::vector<double>(jt.prob.begin(), jt.prob.end());
        d["margin_x1"] = jt.margin_x1;
        d["margin_x2"] = jt.margin_x2;
        d["unit_rate"] = jt.p;
        return d;
      },
      py::arg("mechanism"), py::arg("joint"), py::arg("eta"), py::arg("zeta"), py::arg("gamma"),
      "Exact joint over (X1, X2, R1, R2, U), indexed x1*16 + x2*8 + r1*4 + r2*2 + u.");

  m.def(
      "simulate_scenario",
      [](const std::string& mechanism, const std::vector<double>& joint, const std::vector<double>& eta,
         const std::vector<double>& zeta, const std::vector<double>& gamma, std::size_t n, std::uint64_t seed) {
        return format_dataset(generate_scenario(scenario(mechanism, joint, eta, zeta, gamma), n, seed), true);
      },
      py::arg("mechanism"), py::arg("joint"), py::arg("eta"), py::arg("zeta"), py::arg("gamma"), py::arg("n"),
      py::arg("seed") = 1, "Two-binary sample as CSV text.");

  m.def(
      "fit_scenario",
      [](const std::string& mechanism, const std::vector<double>& joint, const std::vector<double>& eta,
         const std::vector<double>& zeta, const std::vector<double>& gamma, std::size_t n, const std::string& model,
         std::size_t iterations, std::size_t burn_in, std::uint64_t seed, bool margins, double prior_sd) {
        const auto t = scenario(mechanism, joint, eta, zeta, gamma);
        const auto data = generate_scenario(t, n, seed);
        ChainConfig c;
        c.iterations = iterations;
        c.burn_in = burn_in;
        c.chains = 1;
        c.seed = seed;
        c.prior_sd = prior_sd;
        return run(named_model(model, data.schema()), data,
                   margins ? scenario_margins(t) : std::vector<AuxiliaryMargin>{}, c);
      },
      py::arg("mechanism"), py::arg("joint"), py::arg("eta"), py::arg("zeta"), py::arg("gamma"), py::arg("n"),
      py::arg("model"), py::arg("iterations") = 4000, py::arg("burn_in") = 2000, py::arg("seed") = 1,
      py::arg("margins") = true, py::arg("prior_sd") = 0.0,
      "Simulates the two-binary scenario and fits `model` with oracle margins.");

  m.def(
      "fit_config",
      [](const std::filesystem::path& config, std::optional<std::uint64_t> seed,
         std::optional<std::size_t> iterations, std::optional<std::size_t> burn_in) {
        const auto c = load_run_config(config);
        if (!c.data) throw SpecError("config has no data section");
        auto chain = c.chain;
        if (seed) chain.seed = *seed;
        if (iterations) chain.iterations = *iterations;
        if (burn_in) chain.burn_in = *burn_in;
        const auto data = load_dataset(c.data->path.string(), c.schema, c.data->options);
        return run(c.model(), data, c.margins, chain);
      },
      py::arg("config"), py::arg("seed") = py::none(), py::arg("iterations") = py::none(),
      py::arg("burn_in") = py::none(), "Fits the model, data and margins named in a run config.");

  py::class_<Fit>(m, "Fit")
      .def_property_readonly("coefficient_names", [](const Fit& f) { return f.draws.coefficient_names; })
      .def_property_readonly("head_names", [](const Fit& f) { return f.draws.head_names; })
      .def_property_readonly("coefficients", [](const Fit& f) { return f.draws.coefficients; })
      .def_property_readonly("head", [](const Fit& f) { return f.draws.head; })
      .def_property_readonly("acceptance", [](const Fit& f) { return f.draws.acceptance; })
      .def("__len__", [](const Fit& f) { return f.draws.size(); })
      .def(
          "estimand",
          [](const Fit& f, const std::string& target, const std::string& subgroup) {
            return summary_dict(estimand_summary(f.draws, f.schema, Target::parse(target, f.schema),
                                                 Predicate::parse(subgroup, f.schema)));
          },
          py::arg("target"), py::arg("subgroup") = "", "Posterior mean and 95% interval of a population share.")
      .def(
          "nonrespondent_share",
          [](const Fit& f, const std::string& kind, const std::string& target) {
            if (kind != "item" && kind != "unit") throw SpecError("kind must be 'item' or 'unit'");
            const auto cls = kind == "item" ? NonrespondentClass::Item : NonrespondentClass::Unit;
            for (const auto& p : nonrespondent_prediction(f.draws, f.schema, cls, Target::parse(target, f.schema)))
              if (p.group == "all") return summary_dict(p.share);
            throw DataError("no nonrespondents");
          },
          py::arg("kind"), py::arg("target"));
}
