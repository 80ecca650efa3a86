#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "suffup/error.hpp"

namespace suffup {

enum class Status : unsigned char { Event, Censored };

struct Observation {
  double time = 0.0;
  Status status = Status::Censored;

  bool is_event() const noexcept { return status == Status::Event; }
  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Strict weak order used by every sample: ascending time, events before
/// censorings at equal times.
inline bool observation_before(const Observation& lhs, const Observation& rhs) noexcept {
  if (lhs.time != rhs.time) return lhs.time < rhs.time;
  return lhs.is_event() && !rhs.is_event();
}

/// Validated right-censored sample {(Y_i, delta_i)}, kept sorted.
class SurvivalSample {
 public:
  /// Validates and sorts. Throws DataError (EmptySample, NonPositiveTime,
  /// MalformedRow for non-finite times).
  explicit SurvivalSample(std::vector<Observation> observations);

  /// Same as above but skips the sort; throws std::invalid_argument when
  /// the input is not already in sample order.
  static SurvivalSample from_sorted(std::vector<Observation> observations);

  std::size_t size() const noexcept { return obs_.size(); }
  std::span<const Observation> observations() const noexcept { return obs_; }
  const Observation& operator[](std::size_t i) const { return obs_[i]; }

  std::size_t event_count() const noexcept { return n_events_; }
  bool has_events() const noexcept { return n_events_ > 0; }

  /// t_(n), the largest observed time.
  double max_time() const noexcept { return obs_.back().time; }
  /// Largest uncensored time, absent without events.
  std::optional<double> max_event_time() const noexcept;

  friend bool operator==(const SurvivalSample&, const SurvivalSample&) = default;

 private:
  struct Presorted {};
  SurvivalSample(Presorted, std::vector<Observation> observations);
  void validate();

  std::vector<Observation> obs_;
  std::size_t n_events_ = 0;
};

struct SampleSummary {
  std::size_t n = 0;
  std::size_t n_events = 0;
  double censoring_rate = 0.0;
  double t_max = 0.0;
  std::optional<double> t_max_event;
  std::optional<double> median_event_time;
  std::size_t plateau_censored_count = 0;

  friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

SampleSummary summarize(const SurvivalSample& sample);

/// Parses the `time,status` CSV format (LF or CRLF, status 1 = event).
SurvivalSample load_csv(std::istream& source);
SurvivalSample load_csv_text(std::string_view text);
SurvivalSample load_csv_file(const std::string& path);

/// Writes the sample in the same CSV format, shortest round-trip decimals.
void write_csv(const SurvivalSample& sample, std::ostream& out);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

}  // namespace suffup
