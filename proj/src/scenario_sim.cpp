#include "suffup/scenario_sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "suffup/follow_up_test.hpp"
#include "suffup/parallel.hpp"

namespace suffup {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view field, std::string_view spec) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw SpecError("bad number '" + std::string(field) + "' in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Distribution parse_distribution(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts.front();
  auto expect = [&](std::size_t params) {
    if (parts.size() != params + 1) {
      throw SpecError("'" + std::string(kind) + "' takes " + std::to_string(params) + " parameter(s): '" +
                      std::string(spec) + "'");
    }
  };
  Distribution d;
  if (kind == "weibull") {
    expect(2);
    d = Weibull{parse_number(parts[1], spec), parse_number(parts[2], spec)};
  } else if (kind == "exponential") {
    expect(1);
    d = Exponential{parse_number(parts[1], spec)};
  } else if (kind == "lognormal") {
    expect(2);
    d = Lognormal{parse_number(parts[1], spec), parse_number(parts[2], spec)};
  } else if (kind == "uniform") {
    expect(2);
    d = Uniform{parse_number(parts[1], spec), parse_number(parts[2], spec)};
  } else {
    throw SpecError("unknown distribution '" + std::string(kind) + "'");
  }
  validate(d);
  return d;
}

void validate(const Distribution& d) {
  std::visit(overloaded{
                 [](const Weibull& w) {
                   if (!(w.shape > 0 && w.scale > 0)) throw SpecError("weibull shape and scale must be positive");
                 },
                 [](const Exponential& e) {
                   if (!(e.rate > 0)) throw SpecError("exponential rate must be positive");
                 },
                 [](const Lognormal& l) {
                   if (!(l.sigma > 0)) throw SpecError("lognormal sigma must be positive");
                 },
                 [](const Uniform& u) {
                   if (!(u.lo >= 0 && u.hi > u.lo)) throw SpecError("uniform needs 0 <= lo < hi");
                 },
             },
             d);
}

std::string to_string(const Distribution& d) {
  return std::visit(overloaded{
                        [](const Weibull& w) { return "weibull:" + format_double(w.shape) + ":" + format_double(w.scale); },
                        [](const Exponential& e) { return "exponential:" + format_double(e.rate); },
                        [](const Lognormal& l) { return "lognormal:" + format_double(l.mu) + ":" + format_double(l.sigma); },
                        [](const Uniform& u) { return "uniform:" + format_double(u.lo) + ":" + format_double(u.hi); },
                    },
                    d);
}

double draw(const Distribution& d, Rng& rng) {
  return std::visit(overloaded{
                        [&](const Weibull& w) { return w.scale * std::pow(-std::log(rng.uniform()), 1.0 / w.shape); },
                        [&](const Exponential& e) { return -std::log(rng.uniform()) / e.rate; },
                        [&](const Lognormal& l) { return std::exp(l.mu + l.sigma * rng.normal()); },
                        [&](const Uniform& u) { return u.lo + (u.hi - u.lo) * rng.uniform(); },
                    },
                    d);
}

double mean(const Distribution& d) {
  return std::visit(overloaded{
                        [](const Weibull& w) { return w.scale * std::tgamma(1.0 + 1.0 / w.shape); },
                        [](const Exponential& e) { return 1.0 / e.rate; },
                        [](const Lognormal& l) { return std::exp(l.mu + 0.5 * l.sigma * l.sigma); },
                        [](const Uniform& u) { return 0.5 * (u.lo + u.hi); },
                    },
                    d);
}

double survival(const Distribution& d, double t) {
  if (t <= 0.0) return 1.0;
  return std::visit(overloaded{
                        [&](const Weibull& w) { return std::exp(-std::pow(t / w.scale, w.shape)); },
                        [&](const Exponential& e) { return std::exp(-e.rate * t); },
                        [&](const Lognormal& l) {
                          return 0.5 * std::erfc((std::log(t) - l.mu) / (l.sigma * std::numbers::sqrt2));
                        },
                        [&](const Uniform& u) { return std::clamp((u.hi - t) / (u.hi - u.lo), 0.0, 1.0); },
                    },
                    d);
}

void Scenario::validate() const {
  suffup::validate(failure);
  suffup::validate(censoring);
  if (!(p > 0.0 && p < 1.0)) throw SpecError("p must lie in (0, 1)");
  if (n == 0) throw SpecError("n must be at least 1");
}

GeneratedSample generate(const Scenario& scenario, std::uint64_t seed) {
  scenario.validate();
  struct Record {
    Observation obs;
    bool cured;
  };
  Rng rng(seed);
  std::vector<Record> records;
  records.reserve(scenario.n);
  for (std::size_t i = 0; i < scenario.n; ++i) {
    const bool cured = rng.uniform() >= scenario.p;
    const double t = cured ? std::numeric_limits<double>::infinity() : draw(scenario.failure, rng);
    const double c = draw(scenario.censoring, rng);
    records.push_back({t <= c ? Observation{t, Status::Event} : Observation{c, Status::Censored}, cured});
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const Record& l, const Record& r) { return observation_before(l.obs, r.obs); });

  std::vector<Observation> obs;
  std::vector<bool> cured;
  obs.reserve(records.size());
  cured.reserve(records.size());
  std::size_t cured_count = 0;
  for (const auto& r : records) {
    obs.push_back(r.obs);
    cured.push_back(r.cured);
    cured_count += r.cured ? 1 : 0;
  }
  return {SurvivalSample::from_sorted(std::move(obs)), std::move(cured), cured_count};
}

SurvivalSample gen_sample(const Scenario& scenario, std::uint64_t seed) { return generate(scenario, seed).sample; }

PowerReport rejection_rate(const Scenario& scenario, const MonteCarloConfig& config, std::size_t threads) {
  scenario.validate();
  if (config.runs == 0 || config.bootstrap == 0) throw SpecError("runs and bootstrap must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw SpecError("alpha must lie in (0, 1)");

  struct RunRecord {
    bool reject = false;
    double censoring_rate = 0.0;
    double cured_fraction = 0.0;
  };
  std::vector<RunRecord> runs(config.runs);

  parallel_for(config.runs, threads, [&](std::size_t r) {
    const std::uint64_t run_seed = derive_seed(config.seed, r);
    const GeneratedSample data = generate(scenario, derive_seed(run_seed, 0));
    RunRecord& rec = runs[r];
    const auto n = static_cast<double>(data.sample.size());
    rec.censoring_rate = static_cast<double>(data.sample.size() - data.sample.event_count()) / n;
    rec.cured_fraction = static_cast<double>(data.cured_count) / n;
    if (!data.sample.has_events()) return;  // no events: counted as not rejecting

    BootstrapOptions opts;
    opts.alpha = config.alpha;
    opts.replicates = config.bootstrap;
    opts.seed = derive_seed(run_seed, 1);
    opts.fixed_epsilon = config.fixed_epsilon;
    opts.threads = 1;
    rec.reject = bootstrap_test(data.sample, opts).reject;
  });

  PowerReport report;
  report.scenario = scenario;
  report.config = config;
  report.runs_completed = runs.size();
  std::size_t rejections = 0;
  for (const auto& rec : runs) {
    rejections += rec.reject ? 1 : 0;
    report.mean_censoring_rate += rec.censoring_rate;
    report.mean_cure_fraction_observed += rec.cured_fraction;
  }
  const auto total = static_cast<double>(runs.size());
  report.rejection_rate = static_cast<double>(rejections) / total;
  report.mean_censoring_rate /= total;
  report.mean_cure_fraction_observed /= total;
  const double r = report.rejection_rate;
  report.mc_standard_error = std::sqrt(r * (1.0 - r) / total);
  return report;
}

}  // namespace suffup
