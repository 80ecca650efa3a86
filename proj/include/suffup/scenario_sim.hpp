#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "suffup/rng.hpp"
#include "suffup/survival_data.hpp"

namespace suffup {

/// Survival exp{-(t/scale)^shape}.
struct Weibull {
  double shape = 1.0;
  double scale = 1.0;
};
struct Exponential {
  double rate = 1.0;
};
/// log T ~ N(mu, sigma^2).
struct Lognormal {
  double mu = 0.0;
  double sigma = 1.0;
};
struct Uniform {
  double lo = 0.0;
  double hi = 1.0;
};

using Distribution = std::variant<Weibull, Exponential, Lognormal, Uniform>;

/// Parses `weibull:<shape>:<scale>`, `exponential:<rate>`,
/// `lognormal:<mu>:<sigma>` or `uniform:<lo>:<hi>`. Throws SpecError.
Distribution parse_distribution(std::string_view spec);
std::string to_string(const Distribution& d);
void validate(const Distribution& d);

/// One variate by inverse transform (Box-Muller for the log-normal).
double draw(const Distribution& d, Rng& rng);
double mean(const Distribution& d);
/// P(X > t).
double survival(const Distribution& d, double t);

struct Scenario {
  Distribution failure = Weibull{1.5, 1.5};
  Distribution censoring = Weibull{1.0, 2.5};
  double p = 0.9;  // non-cure probability
  std::size_t n = 100;
  std::string label;

  /// Throws SpecError on non-positive parameters, p outside (0,1) or n == 0.
  void validate() const;
};

struct GeneratedSample {
  SurvivalSample sample;
  /// cured[i] refers to sample[i]: latent T was infinite.
  std::vector<bool> cured;
  std::size_t cured_count = 0;
};

/// Mixture-cure draw: each unit is susceptible with probability p, then
/// Y = min(T, C) and delta = 1(T <= C); cured units are censored at C.
GeneratedSample generate(const Scenario& scenario, std::uint64_t seed);
SurvivalSample gen_sample(const Scenario& scenario, std::uint64_t seed);

struct MonteCarloConfig {
  std::size_t runs = 1000;
  std::size_t bootstrap = 500;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  bool fixed_epsilon = false;
};

struct PowerReport {
  double rejection_rate = 0.0;
  double mc_standard_error = 0.0;
  double mean_censoring_rate = 0.0;
  double mean_cure_fraction_observed = 0.0;
  std::size_t runs_completed = 0;
  Scenario scenario;
  MonteCarloConfig config;
};

/// Empirical rejection frequency of bootstrap_test over config.runs
/// datasets. Run r draws its data from derive_seed(derive_seed(seed, r), 0)
/// and its bootstrap from derive_seed(derive_seed(seed, r), 1); runs are
/// spread over `threads` workers (0 = default).
PowerReport rejection_rate(const Scenario& scenario, const MonteCarloConfig& config, std::size_t threads = 0);

enum class Hypothesis { H0, H1 };

/// One column of the reference simulation tables.
struct PresetCell {
  int table = 1;  // 1: Weibull, 2: exponential, 3: log-normal failure
  Hypothesis hypothesis = Hypothesis::H0;
  double censoring_parameter = 0.0;  // lambda (H0) or mu (H1)
  double p = 0.9;
  Distribution failure;
  Distribution censoring;
  double expected_censoring_rate = 0.0;  // table header
  std::array<double, 4> reference_rates{};  // for preset_sample_sizes

  /// e.g. "table1:h0:lambda2.5:p0.9"
  std::string name() const;
  Scenario scenario(std::size_t n) const;
  std::optional<double> reference_rate(std::size_t n) const;
};

inline constexpr std::array<std::size_t, 4> preset_sample_sizes{400, 800, 1200, 1800};

/// All 48 cells of the three simulation tables.
const std::vector<PresetCell>& preset_scenarios();

struct ResolvedPreset {
  PresetCell cell;
  std::optional<std::size_t> n;
};

/// Resolves "tableK:h0|h1:lambdaX|muX:pY[:nN]". Throws SpecError.
ResolvedPreset resolve_preset(std::string_view name);

}  // namespace suffup
