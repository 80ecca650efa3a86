#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "suffup/follow_up_test.hpp"
#include "suffup/km_estimator.hpp"
#include "suffup/report.hpp"
#include "suffup/scenario_sim.hpp"

namespace suffup::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

void emit(std::ostream& out, Format format, const nlohmann::json& payload, const std::string& text) {
  if (format == Format::Json) out << payload.dump(2) << '\n';
  else out << text;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
}

void check_positive(std::size_t value, const char* flag) {
  if (value == 0) throw UsageError(std::string(flag) + " must be at least 1");
}

struct TestArgs {
  std::string input;
  double alpha = 0.05;
  std::size_t bootstrap = 1000;
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
  bool fixed_epsilon = false;
  bool diagnostic = false;
};

int cmd_test(const TestArgs& a, Format format, std::ostream& out, std::ostream& err) {
  check_alpha(a.alpha);
  check_positive(a.bootstrap, "--bootstrap");
  const SurvivalSample sample = load_csv_file(a.input);
  if (!sample.has_events()) throw DataError(DataErrorKind::MissingEventTime, "no uncensored observations");

  const SampleSummary summary = summarize(sample);
  if (a.epsilon) {
    if (!(*a.epsilon > 0.0 && *a.epsilon <= summary.t_max)) {
      throw UsageError("--epsilon must lie in (0, t_max] = (0, " + format_double(summary.t_max) + "]");
    }
    if (!epsilon_admissible(*a.epsilon, summary.t_max, *summary.t_max_event)) {
      err << "warning: epsilon outside (t_max - t_max_event, t_max); the statistic may be degenerate\n";
    }
  }

  BootstrapOptions opts;
  opts.alpha = a.alpha;
  opts.replicates = a.bootstrap;
  opts.seed = a.seed;
  opts.epsilon = a.epsilon;
  opts.fixed_epsilon = a.fixed_epsilon;
  const TestResult result = bootstrap_test(sample, opts);

  nlohmann::json payload = to_json(result);
  payload["sample"] = to_json(summary);
  std::string text = format_text(result);
  if (a.diagnostic) {
    try {
      const AsymptoticDiagnostic diag = asymptotic_diagnostic(sample, result.estimate.epsilon);
      payload["diagnostic"] = to_json(diag);
      text += format_text(diag);
    } catch (const DegenerateDenominator& e) {
      payload["diagnostic"] = {{"available", false}, {"reason", e.what()}};
      text += "asymptotic diagnostic        unavailable (" + std::string(e.what()) + ")\n";
    }
  }
  emit(out, format, payload, text);
  return Success;
}

int cmd_km(const std::string& input, const std::string& output, std::ostream& out) {
  const StepFunction f = km_fit(load_csv_file(input));
  std::ofstream file(output);
  if (!file) throw OutputError("cannot write '" + output + "'");
  write_km_csv(f, file);
  file.flush();
  if (!file) throw OutputError("write to '" + output + "' failed");
  out << "wrote " << f.size() + 1 << " rows to " << output << '\n';
  return Success;
}

struct SimulateArgs {
  std::string failure;
  std::string censor;
  std::optional<double> p;
  std::optional<std::size_t> n;
  std::string preset;
  MonteCarloConfig config;
};

int cmd_simulate(const SimulateArgs& a, Format format, std::ostream& out) {
  check_alpha(a.config.alpha);
  check_positive(a.config.runs, "--runs");
  check_positive(a.config.bootstrap, "--bootstrap");

  Scenario scenario;
  std::optional<PresetCell> cell;
  try {
    if (!a.preset.empty()) {
      const ResolvedPreset resolved = resolve_preset(a.preset);
      cell = resolved.cell;
      const auto n = a.n ? a.n : resolved.n;
      if (!n) throw UsageError("preset '" + a.preset + "' needs a sample size (suffix :nN or --n)");
      scenario = resolved.cell.scenario(*n);
      if (!a.failure.empty()) scenario.failure = parse_distribution(a.failure);
      if (!a.censor.empty()) scenario.censoring = parse_distribution(a.censor);
      if (a.p) scenario.p = *a.p;
    } else {
      if (a.failure.empty() || a.censor.empty() || !a.p || !a.n) {
        throw UsageError("simulate needs --failure, --censor, --p and --n (or --preset)");
      }
      scenario.failure = parse_distribution(a.failure);
      scenario.censoring = parse_distribution(a.censor);
      scenario.p = *a.p;
      scenario.n = *a.n;
      scenario.label = "custom";
    }
    scenario.validate();
  } catch (const SpecError& e) {
    throw UsageError(e.what());
  }

  const PowerReport report = rejection_rate(scenario, a.config);
  nlohmann::json payload = to_json(report);
  std::string text = format_text(report);
  if (cell) {
    const auto reference = cell->reference_rate(scenario.n);
    payload["preset"] = {
        {"name", cell->name()},
        {"expected_censoring_rate", cell->expected_censoring_rate},
        {"reference_rejection_rate", reference ? nlohmann::json(*reference) : nlohmann::json(nullptr)},
    };
    text += "reference censoring rate    " + fixed4(cell->expected_censoring_rate) + "\n";
    if (reference) text += "reference rejection rate    " + fixed4(*reference) + "\n";
  }
  emit(out, format, payload, text);
  return Success;
}

int cmd_summarize(const std::string& input, Format format, std::ostream& out) {
  const SampleSummary summary = summarize(load_csv_file(input));
  emit(out, format, to_json(summary), format_text(summary));
  return Success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bootstrap test for sufficient follow-up in cure-rate survival data"};
  app.require_subcommand(1);
  Format format = Format::Text;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->option_text("text|json [text]");
  };

  TestArgs test_args;
  auto* test = app.add_subcommand("test", "Run the sufficient follow-up test on a time,status CSV file");
  test->add_option("--input", test_args.input, "Input CSV")->required();
  test->add_option("--alpha", test_args.alpha, "Nominal level")->capture_default_str();
  test->add_option("--bootstrap", test_args.bootstrap, "Bootstrap replicates B")->capture_default_str();
  test->add_option("--seed", test_args.seed, "Master seed")->capture_default_str();
  test->add_option("--epsilon", test_args.epsilon, "Fixed window instead of the data-driven rule");
  test->add_flag("--fixed-epsilon", test_args.fixed_epsilon, "Reuse the original window in every replicate");
  test->add_flag("--diagnostic", test_args.diagnostic, "Add plug-in asymptotic bias and variance");
  add_format(test);

  std::string km_input, km_output;
  auto* km = app.add_subcommand("km", "Export the Kaplan-Meier curve as t,F_hat CSV");
  km->add_option("--input", km_input, "Input CSV")->required();
  km->add_option("--out", km_output, "Output CSV")->required();

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo rejection rate for a cure-mixture scenario");
  simulate->add_option("--failure", sim_args.failure, "Susceptible failure law, e.g. weibull:1.5:1.5");
  simulate->add_option("--censor", sim_args.censor, "Censoring law, e.g. uniform:0:2.5");
  simulate->add_option("--p", sim_args.p, "Non-cure probability");
  simulate->add_option("--n", sim_args.n, "Sample size");
  simulate->add_option("--runs", sim_args.config.runs, "Simulated datasets")->capture_default_str();
  simulate->add_option("--bootstrap", sim_args.config.bootstrap, "Bootstrap replicates per dataset")
      ->capture_default_str();
  simulate->add_option("--alpha", sim_args.config.alpha, "Nominal level")->capture_default_str();
  simulate->add_option("--seed", sim_args.config.seed, "Master seed")->capture_default_str();
  simulate->add_flag("--fixed-epsilon", sim_args.config.fixed_epsilon, "Reuse the original window in replicates");
  simulate->add_option("--preset", sim_args.preset, "Table cell, e.g. table1:h0:lambda2.5:p0.9:n800");
  add_format(simulate);

  std::string summary_input;
  auto* summarize_cmd = app.add_subcommand("summarize", "Summary statistics of a time,status CSV file");
  summarize_cmd->add_option("--input", summary_input, "Input CSV")->required();
  add_format(summarize_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : Usage;
  }

  try {
    if (*test) return cmd_test(test_args, format, out, err);
    if (*km) return cmd_km(km_input, km_output, out);
    if (*simulate) return cmd_simulate(sim_args, format, out);
    if (*summarize_cmd) return cmd_summarize(summary_input, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return DataFailure;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return OutputFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  }
  return Usage;
}

}  // namespace suffup::cli
