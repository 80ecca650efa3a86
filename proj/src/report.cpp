#include "suffup/report.hpp"

#include <cstdio>
#include <sstream>

namespace suffup {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

void row(std::ostringstream& out, const char* label, const std::string& value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%-28s", label);
  out << buf << value << '\n';
}

std::string general4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", value);
  return buf;
}

std::string optional_fixed4(const std::optional<double>& v) { return v ? fixed4(*v) : std::string("n/a"); }

}  // namespace

std::string fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

json to_json(const SampleSummary& s) {
  return {
      {"n", s.n},
      {"n_events", s.n_events},
      {"censoring_rate", s.censoring_rate},
      {"t_max", s.t_max},
      {"t_max_event", optional_number(s.t_max_event)},
      {"median_event_time", optional_number(s.median_event_time)},
      {"plateau_censored_count", s.plateau_censored_count},
  };
}

json to_json(const TestResult& r) {
  return {
      {"t_n", r.t_n_stat},
      {"p_naive", r.estimate.p_naive},
      {"p_gumbel", r.estimate.p_gumbel},
      {"p_gumbel_raw", optional_number(r.estimate.p_gumbel_raw)},
      {"clamp", to_string(r.estimate.clamp)},
      {"epsilon", r.estimate.epsilon.epsilon},
      {"epsilon_branch", to_string(r.estimate.epsilon.branch)},
      {"critical_value", r.critical_value},
      {"p_value", r.p_value},
      {"reject", r.reject},
      {"alpha", r.alpha},
      {"n_bootstrap", r.n_bootstrap},
      {"seed", r.seed},
      {"fixed_epsilon", r.fixed_epsilon},
      {"n_degenerate_replicates", r.n_degenerate_replicates},
      {"n_zero_event_replicates", r.n_zero_event_replicates},
  };
}

json to_json(const AsymptoticDiagnostic& d) {
  return {
      {"s1", d.s1},
      {"s2", d.s2},
      {"s3", d.s3},
      {"bias", d.bias},
      {"variance", d.variance},
      {"truncated", d.truncated},
      {"epsilon", d.epsilon},
      {"f_hat", {d.f_at[0], d.f_at[1], d.f_at[2]}},
  };
}

json to_json(const Scenario& s) {
  return {
      {"failure", to_string(s.failure)},
      {"censoring", to_string(s.censoring)},
      {"p", s.p},
      {"n", s.n},
      {"label", s.label},
  };
}

json to_json(const MonteCarloConfig& c) {
  return {
      {"runs", c.runs},
      {"bootstrap", c.bootstrap},
      {"alpha", c.alpha},
      {"seed", c.seed},
      {"fixed_epsilon", c.fixed_epsilon},
  };
}

json to_json(const PowerReport& r) {
  return {
      {"rejection_rate", r.rejection_rate},
      {"mc_standard_error", r.mc_standard_error},
      {"mean_censoring_rate", r.mean_censoring_rate},
      {"mean_cure_fraction_observed", r.mean_cure_fraction_observed},
      {"runs_completed", r.runs_completed},
      {"scenario", to_json(r.scenario)},
      {"config", to_json(r.config)},
  };
}

std::string format_text(const SampleSummary& s) {
  std::ostringstream out;
  row(out, "observations", std::to_string(s.n));
  row(out, "events", std::to_string(s.n_events));
  row(out, "censoring rate", fixed4(s.censoring_rate));
  row(out, "largest time", fixed4(s.t_max));
  row(out, "largest event time", optional_fixed4(s.t_max_event));
  row(out, "median event time", optional_fixed4(s.median_event_time));
  row(out, "censored beyond last event", std::to_string(s.plateau_censored_count));
  return out.str();
}

std::string format_text(const TestResult& r) {
  std::ostringstream out;
  row(out, "T_n", fixed4(r.t_n_stat));
  row(out, "p_naive", fixed4(r.estimate.p_naive));
  row(out, "p_gumbel", fixed4(r.estimate.p_gumbel));
  row(out, "clamp", to_string(r.estimate.clamp));
  row(out, "epsilon", fixed4(r.estimate.epsilon.epsilon) + " (" + to_string(r.estimate.epsilon.branch) + ")");
  row(out, "critical value", fixed4(r.critical_value));
  row(out, "p-value", fixed4(r.p_value));
  row(out, "decision", r.reject ? "reject sufficient follow-up" : "do not reject sufficient follow-up");
  row(out, "alpha", fixed4(r.alpha));
  row(out, "bootstrap replicates", std::to_string(r.n_bootstrap) + (r.fixed_epsilon ? " (fixed epsilon)" : ""));
  row(out, "degenerate replicates", std::to_string(r.n_degenerate_replicates));
  row(out, "seed", std::to_string(r.seed));
  return out.str();
}

std::string format_text(const AsymptoticDiagnostic& d) {
  std::ostringstream out;
  row(out, "s1, s2, s3", fixed4(d.s1) + ", " + fixed4(d.s2) + ", " + fixed4(d.s3));
  row(out, "asymptotic bias", general4(d.bias));
  row(out, "asymptotic variance", general4(d.variance) + (d.truncated ? " (truncated)" : ""));
  return out.str();
}

std::string format_text(const PowerReport& r) {
  std::ostringstream out;
  row(out, "scenario", r.scenario.label.empty() ? std::string("custom") : r.scenario.label);
  row(out, "failure", to_string(r.scenario.failure));
  row(out, "censoring", to_string(r.scenario.censoring));
  row(out, "p, n", fixed4(r.scenario.p) + ", " + std::to_string(r.scenario.n));
  row(out, "rejection rate", fixed4(r.rejection_rate));
  row(out, "MC standard error", fixed4(r.mc_standard_error));
  row(out, "mean censoring rate", fixed4(r.mean_censoring_rate));
  row(out, "mean cured fraction", fixed4(r.mean_cure_fraction_observed));
  row(out, "runs", std::to_string(r.runs_completed));
  row(out, "bootstrap, alpha, seed",
      std::to_string(r.config.bootstrap) + ", " + fixed4(r.config.alpha) + ", " + std::to_string(r.config.seed));
  return out.str();
}

}  // namespace suffup
