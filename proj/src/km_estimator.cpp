#include "suffup/km_estimator.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace suffup {

StepFunction::StepFunction(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() != values_.size()) throw std::invalid_argument("knots/values size mismatch");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) throw std::invalid_argument("step value outside [0,1]");
    if (i > 0 && !(knots_[i] > knots_[i - 1])) throw std::invalid_argument("knots must ascend strictly");
    if (i > 0 && values_[i] < values_[i - 1]) throw std::invalid_argument("step values must be nondecreasing");
  }
}

double StepFunction::operator()(double t) const noexcept {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  if (it == knots_.begin()) return 0.0;
  return values_[static_cast<std::size_t>(it - knots_.begin()) - 1];
}

double StepFunction::left_limit(double t) const noexcept {
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), t);
  if (it == knots_.begin()) return 0.0;
  return values_[static_cast<std::size_t>(it - knots_.begin()) - 1];
}

namespace {

// Walks tied groups of the sorted sample. For every group with at least one
// "counted" observation (events for F, censorings for F_c) calls
// visit(time, counted, at_risk).
template <typename IsCounted, typename Visit>
void for_each_group(std::span<const Observation> obs, IsCounted is_counted, Visit visit) {
  const std::size_t n = obs.size();
  std::size_t i = 0;
  while (i < n) {
    const double t = obs[i].time;
    const std::size_t at_risk = n - i;
    std::size_t counted = 0;
    std::size_t j = i;
    for (; j < n && obs[j].time == t; ++j) {
      if (is_counted(obs[j])) ++counted;
    }
    if (counted > 0) visit(t, counted, at_risk);
    i = j;
  }
}

// The survival product is carried as S = (R / n) * W, where R is the number
// still at risk after the jump and W collects the factors (D_next + c)/D_next
// contributed by observations removed without a jump. Without such removals
// W stays exactly 1 and F = (n - R)/n reproduces the empirical CDF bit for bit.
template <typename IsCounted>
StepFunction product_limit(std::span<const Observation> obs, IsCounted is_counted) {
  const std::size_t n = obs.size();
  std::vector<double> knots;
  std::vector<double> values;
  double weight = 1.0;
  std::size_t remaining_after_last = n;  // at risk just after the previous jump
  const double nd = static_cast<double>(n);

  for_each_group(obs, is_counted, [&](double t, std::size_t d, std::size_t at_risk) {
    if (at_risk != remaining_after_last) {
      weight *= static_cast<double>(remaining_after_last) / static_cast<double>(at_risk);
    }
    const std::size_t after = at_risk - d;
    remaining_after_last = after;
    double f = (nd - static_cast<double>(after) * weight) / nd;
    f = std::clamp(f, 0.0, 1.0);
    if (!values.empty()) f = std::max(f, values.back());
    knots.push_back(t);
    values.push_back(f);
  });
  return StepFunction(std::move(knots), std::move(values));
}

}  // namespace

RiskTable risk_table(const SurvivalSample& sample) {
  RiskTable table;
  for_each_group(sample.observations(), [](const Observation& o) { return o.is_event(); },
                 [&](double t, std::size_t d, std::size_t at_risk) { table.push_back({t, d, at_risk}); });
  return table;
}

StepFunction km_fit(std::span<const Observation> sorted) {
  return product_limit(sorted, [](const Observation& o) { return o.is_event(); });
}

StepFunction km_fit(const SurvivalSample& sample) { return km_fit(sample.observations()); }

StepFunction censoring_km(const SurvivalSample& sample) {
  return product_limit(sample.observations(), [](const Observation& o) { return !o.is_event(); });
}

VarianceProcess::VarianceProcess(const SurvivalSample& sample) {
  const StepFunction f = km_fit(sample);
  const StepFunction fc = censoring_km(sample);
  double total = 0.0;
  bool truncated = false;
  const auto knots = f.knots();
  const auto values = f.values();
  double before = 0.0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double jump = values[i] - before;
    const double denom = (1.0 - values[i]) * (1.0 - before) * (1.0 - fc.left_limit(knots[i]));
    if (denom > 0.0) {
      total += jump / denom;
    } else {
      truncated = true;
    }
    knots_.push_back(knots[i]);
    cumulative_.push_back(total);
    truncated_.push_back(truncated ? 1 : 0);
    before = values[i];
  }
}

VarianceEstimate VarianceProcess::operator()(double t) const noexcept {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  if (it == knots_.begin()) return {};
  const auto i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return {cumulative_[i], truncated_[i] != 0};
}

VarianceEstimate variance_process(const SurvivalSample& sample, double t) {
  return VarianceProcess(sample)(t);
}

void write_km_csv(const StepFunction& f, std::ostream& out) {
  out << "t,F_hat\n0,0\n";
  const auto knots = f.knots();
  const auto values = f.values();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    out << format_double(knots[i]) << ',' << format_double(values[i]) << '\n';
  }
}

}  // namespace suffup
