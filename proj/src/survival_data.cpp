#include "suffup/survival_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace suffup {

const char* to_string(DataErrorKind kind) {
  switch (kind) {
    case DataErrorKind::MalformedRow: return "malformed row";
    case DataErrorKind::NonPositiveTime: return "non-positive time";
    case DataErrorKind::UnknownStatus: return "unknown status";
    case DataErrorKind::EmptySample: return "empty sample";
    case DataErrorKind::MissingEventTime: return "no uncensored observations";
  }
  return "data error";
}

SurvivalSample::SurvivalSample(std::vector<Observation> observations) : obs_(std::move(observations)) {
  validate();
  std::stable_sort(obs_.begin(), obs_.end(), observation_before);
}

SurvivalSample::SurvivalSample(Presorted, std::vector<Observation> observations)
    : obs_(std::move(observations)) {
  validate();
  if (!std::is_sorted(obs_.begin(), obs_.end(), observation_before)) {
    throw std::invalid_argument("observations are not in sample order");
  }
}

SurvivalSample SurvivalSample::from_sorted(std::vector<Observation> observations) {
  return SurvivalSample(Presorted{}, std::move(observations));
}

void SurvivalSample::validate() {
  if (obs_.empty()) throw DataError(DataErrorKind::EmptySample, "sample has no observations");
  n_events_ = 0;
  for (const auto& o : obs_) {
    if (!std::isfinite(o.time)) throw DataError(DataErrorKind::MalformedRow, "time is not finite");
    if (o.time <= 0.0) throw DataError(DataErrorKind::NonPositiveTime, "time must be strictly positive");
    if (o.is_event()) ++n_events_;
  }
}

std::optional<double> SurvivalSample::max_event_time() const noexcept {
  for (auto it = obs_.rbegin(); it != obs_.rend(); ++it) {
    if (it->is_event()) return it->time;
  }
  return std::nullopt;
}

SampleSummary summarize(const SurvivalSample& sample) {
  SampleSummary s;
  s.n = sample.size();
  s.n_events = sample.event_count();
  s.censoring_rate = static_cast<double>(s.n - s.n_events) / static_cast<double>(s.n);
  s.t_max = sample.max_time();
  s.t_max_event = sample.max_event_time();

  if (s.t_max_event) {
    std::vector<double> events;
    events.reserve(s.n_events);
    for (const auto& o : sample.observations()) {
      if (o.is_event()) events.push_back(o.time);
      else if (o.time > *s.t_max_event) ++s.plateau_censored_count;
    }
    // already ascending
    const std::size_t k = events.size();
    s.median_event_time = (k % 2 == 1) ? events[k / 2] : 0.5 * (events[k / 2 - 1] + events[k / 2]);
  }
  return s;
}

namespace {

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

[[noreturn]] void fail(DataErrorKind kind, std::size_t line, const std::string& what) {
  throw DataError(kind, "line " + std::to_string(line) + ": " + what, line);
}

}  // namespace

SurvivalSample load_csv(std::istream& source) {
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<Observation> obs;

  while (std::getline(source, raw)) {
    ++line_no;
    const std::string_view line = trim_cr(raw);
    if (!header_seen) {
      if (line != "time,status") fail(DataErrorKind::MalformedRow, line_no, "expected header 'time,status'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      fail(DataErrorKind::MalformedRow, line_no, "expected 2 columns");
    }
    const std::string_view time_field = line.substr(0, comma);
    const std::string_view status_field = line.substr(comma + 1);

    double t = 0.0;
    const auto [ptr, ec] = std::from_chars(time_field.data(), time_field.data() + time_field.size(), t);
    if (ec != std::errc{} || ptr != time_field.data() + time_field.size() || time_field.empty() ||
        !std::isfinite(t)) {
      fail(DataErrorKind::MalformedRow, line_no, "unparseable time '" + std::string(time_field) + "'");
    }
    if (t <= 0.0) fail(DataErrorKind::NonPositiveTime, line_no, "time must be strictly positive");

    Status status;
    if (status_field == "1") status = Status::Event;
    else if (status_field == "0") status = Status::Censored;
    else fail(DataErrorKind::UnknownStatus, line_no, "status must be 0 or 1, got '" + std::string(status_field) + "'");

    obs.push_back({t, status});
  }
  if (!header_seen) throw DataError(DataErrorKind::MalformedRow, "missing header 'time,status'", 1);
  if (obs.empty()) throw DataError(DataErrorKind::EmptySample, "sample has no observations");
  return SurvivalSample(std::move(obs));
}

SurvivalSample load_csv_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_csv(in);
}

SurvivalSample load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(DataErrorKind::MalformedRow, "cannot open '" + path + "'");
  return load_csv(in);
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_csv(const SurvivalSample& sample, std::ostream& out) {
  out << "time,status\n";
  for (const auto& o : sample.observations()) {
    out << format_double(o.time) << ',' << (o.is_event() ? '1' : '0') << '\n';
  }
}

}  // namespace suffup
