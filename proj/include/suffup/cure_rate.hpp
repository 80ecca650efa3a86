#pragma once

#include <optional>
#include <string>

#include "suffup/km_estimator.hpp"

namespace suffup {

enum class EpsilonBranch { StarRule, TmaxFallback, UserSupplied };

struct EpsilonChoice {
  double epsilon = 0.0;
  EpsilonBranch branch = EpsilonBranch::StarRule;

  friend bool operator==(const EpsilonChoice&, const EpsilonChoice&) = default;
};

enum class ClampRule { None, DenominatorZero, BelowNaive, AboveOne };

struct CureRateEstimate {
  double p_naive = 0.0;
  double p_gumbel = 0.0;
  std::optional<double> p_gumbel_raw;
  EpsilonChoice epsilon;
  ClampRule clamp = ClampRule::None;

  friend bool operator==(const CureRateEstimate&, const CureRateEstimate&) = default;
};

const char* to_string(EpsilonBranch branch);
const char* to_string(ClampRule rule);

/// Plateau height F_hat(t_(n)).
inline double phat_naive(const StepFunction& f, double t_max) noexcept { return f(t_max); }

/// Data-driven window: (9/8) t_max - (1/4) t_max_event when
/// 2 (t_max - t_max_event) < t_max, else t_max.
/// Requires 0 < t_max_event <= t_max.
EpsilonChoice epsilon_star(double t_max, double t_max_event);

/// epsilon_star from the sample; throws DataError(MissingEventTime) when the
/// sample has no events.
EpsilonChoice epsilon_star(const SurvivalSample& sample);

/// Validates a user window against (0, t_max]; throws std::invalid_argument.
EpsilonChoice user_epsilon(double epsilon, double t_max);

/// True when epsilon lies in the open interval (t_max - t_max_event, t_max)
/// where the extrapolation is informative.
bool epsilon_admissible(double epsilon, double t_max, double t_max_event) noexcept;

/// Gumbel-domain extrapolation from F at t-eps (a), t-eps/2 (b) and t (c):
///   a + (b - a)^2 / (2b - a - c),
/// evaluated in the equivalent form c + (b - c)^2 / (2b - a - c) so that a
/// flat window (b == c) returns c exactly. Empty when 2b - a - c == 0.
std::optional<double> gumbel_extrapolate(double a, double b, double c) noexcept;

/// Extrapolated estimate with the clamping rules applied in order:
/// undefined -> p_naive, below p_naive -> p_naive, above one -> 1.
CureRateEstimate phat_gumbel(const StepFunction& f, double t_max, const EpsilonChoice& eps, double p_naive);

}  // namespace suffup
