#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "suffup/survival_data.hpp"

namespace suffup {

struct RiskRow {
  double time = 0.0;        // distinct uncensored time
  std::size_t events = 0;   // d_i
  std::size_t at_risk = 0;  // D_i = #{Y_j >= time}

  friend bool operator==(const RiskRow&, const RiskRow&) = default;
};

using RiskTable = std::vector<RiskRow>;

/// Right-continuous nondecreasing step function on [0, inf), 0 before the
/// first knot. Knots and values are parallel arrays.
class StepFunction {
 public:
  StepFunction() = default;
  /// Throws std::invalid_argument unless knots ascend strictly and values
  /// are nondecreasing within [0, 1].
  StepFunction(std::vector<double> knots, std::vector<double> values);

  /// f(t); 0 for t before the first knot (negative t included).
  double operator()(double t) const noexcept;
  /// f(t-), the value strictly before t.
  double left_limit(double t) const noexcept;

  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return knots_.size(); }
  bool empty() const noexcept { return knots_.empty(); }
  /// Value on the last step, 0 when empty.
  double final_value() const noexcept { return values_.empty() ? 0.0 : values_.back(); }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

inline double eval(const StepFunction& f, double t) noexcept { return f(t); }
inline double eval_left(const StepFunction& f, double t) noexcept { return f.left_limit(t); }

RiskTable risk_table(const SurvivalSample& sample);

/// Product-limit estimate F_hat of the (possibly improper) event-time law.
StepFunction km_fit(const SurvivalSample& sample);
StepFunction km_fit(std::span<const Observation> sorted);

/// Reverse product-limit: estimate of the censoring law F_c.
StepFunction censoring_km(const SurvivalSample& sample);

struct VarianceEstimate {
  double value = 0.0;
  /// Some term at or before t had a zero denominator and was dropped.
  bool truncated = false;
};

/// Plug-in estimate of
///   v(t) = int_[0,t] dF(s) / [ (1-F(s)) (1-F(s-)) (1-F_c(s-)) ].
/// Precomputes cumulative sums once so repeated evaluation is a lookup.
class VarianceProcess {
 public:
  explicit VarianceProcess(const SurvivalSample& sample);

  VarianceEstimate operator()(double t) const noexcept;

 private:
  std::vector<double> knots_;
  std::vector<double> cumulative_;
  std::vector<unsigned char> truncated_;
};

VarianceEstimate variance_process(const SurvivalSample& sample, double t);

/// KM export: header `t,F_hat`, the row (0,0), then each knot with its
/// post-jump value.
void write_km_csv(const StepFunction& f, std::ostream& out);

}  // namespace suffup
