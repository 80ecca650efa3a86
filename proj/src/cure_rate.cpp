#include "suffup/cure_rate.hpp"

#include <stdexcept>

namespace suffup {

const char* to_string(EpsilonBranch branch) {
  switch (branch) {
    case EpsilonBranch::StarRule: return "star_rule";
    case EpsilonBranch::TmaxFallback: return "t_max_fallback";
    case EpsilonBranch::UserSupplied: return "user_supplied";
  }
  return "?";
}

const char* to_string(ClampRule rule) {
  switch (rule) {
    case ClampRule::None: return "none";
    case ClampRule::DenominatorZero: return "denominator_zero";
    case ClampRule::BelowNaive: return "below_naive";
    case ClampRule::AboveOne: return "above_one";
  }
  return "?";
}

EpsilonChoice epsilon_star(double t_max, double t_max_event) {
  if (!(t_max_event > 0.0 && t_max_event <= t_max)) {
    throw std::invalid_argument("epsilon_star requires 0 < t_max_event <= t_max");
  }
  if (2.0 * (t_max - t_max_event) < t_max) {
    return {9.0 / 8.0 * t_max - 0.25 * t_max_event, EpsilonBranch::StarRule};
  }
  return {t_max, EpsilonBranch::TmaxFallback};
}

EpsilonChoice epsilon_star(const SurvivalSample& sample) {
  const auto last_event = sample.max_event_time();
  if (!last_event) throw DataError(DataErrorKind::MissingEventTime, "no uncensored observations");
  return epsilon_star(sample.max_time(), *last_event);
}

EpsilonChoice user_epsilon(double epsilon, double t_max) {
  if (!(epsilon > 0.0 && epsilon <= t_max)) {
    throw std::invalid_argument("epsilon must lie in (0, t_max]");
  }
  return {epsilon, EpsilonBranch::UserSupplied};
}

bool epsilon_admissible(double epsilon, double t_max, double t_max_event) noexcept {
  return epsilon > t_max - t_max_event && epsilon < t_max;
}

std::optional<double> gumbel_extrapolate(double a, double b, double c) noexcept {
  const double denom = 2.0 * b - a - c;
  if (denom == 0.0) return std::nullopt;
  const double rise = b - c;
  return c + rise * rise / denom;
}

CureRateEstimate phat_gumbel(const StepFunction& f, double t_max, const EpsilonChoice& eps, double p_naive) {
  CureRateEstimate est;
  est.p_naive = p_naive;
  est.epsilon = eps;
  const double a = f(t_max - eps.epsilon);
  const double b = f(t_max - 0.5 * eps.epsilon);
  const double c = f(t_max);
  est.p_gumbel_raw = gumbel_extrapolate(a, b, c);

  if (!est.p_gumbel_raw) {
    est.p_gumbel = p_naive;
    est.clamp = ClampRule::DenominatorZero;
  } else if (*est.p_gumbel_raw < p_naive) {
    est.p_gumbel = p_naive;
    est.clamp = ClampRule::BelowNaive;
  } else if (*est.p_gumbel_raw > 1.0) {
    est.p_gumbel = 1.0;
    est.clamp = ClampRule::AboveOne;
  } else {
    est.p_gumbel = *est.p_gumbel_raw;
  }
  return est;
}

}  // namespace suffup
