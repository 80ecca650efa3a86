#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "suffup/survival_data.hpp"

using namespace suffup;

namespace {

DataErrorKind error_kind(std::string_view text) {
  try {
    load_csv_text(text);
  } catch (const DataError& e) {
    return e.kind();
  }
  FAIL("expected a DataError");
  return DataErrorKind::MalformedRow;
}

}  // namespace

TEST_CASE("load_csv parses and sorts") {
  const auto s = load_csv_text("time,status\n1,1\n2,0\n3,1");
  REQUIRE(s.size() == 3);
  CHECK(s.event_count() == 2);
  CHECK(s[0] == Observation{1, Status::Event});
  CHECK(s[1] == Observation{2, Status::Censored});
  CHECK(s[2] == Observation{3, Status::Event});

  const auto shuffled = load_csv_text("time,status\r\n3,1\r\n1,1\r\n2,0\r\n");
  CHECK(shuffled == s);
}

TEST_CASE("tie convention puts events before censorings") {
  const auto s = load_csv_text("time,status\n2,0\n2,1");
  CHECK(s[0].is_event());
  CHECK_FALSE(s[1].is_event());
}

TEST_CASE("load_csv rejects bad input") {
  CHECK(error_kind("time,status\n0,1") == DataErrorKind::NonPositiveTime);
  CHECK(error_kind("time,status\n-1.5,1") == DataErrorKind::NonPositiveTime);
  CHECK(error_kind("time,status\n1,2") == DataErrorKind::UnknownStatus);
  CHECK(error_kind("time,status\n1,yes") == DataErrorKind::UnknownStatus);
  CHECK(error_kind("time,status\n1") == DataErrorKind::MalformedRow);
  CHECK(error_kind("time,status\n1,1,1") == DataErrorKind::MalformedRow);
  CHECK(error_kind("time,status\nabc,1") == DataErrorKind::MalformedRow);
  CHECK(error_kind("time,status\n1e999,1") == DataErrorKind::MalformedRow);
  CHECK(error_kind("time,status\n1,000,1") == DataErrorKind::MalformedRow);
  CHECK(error_kind("t,s\n1,1") == DataErrorKind::MalformedRow);
  CHECK(error_kind("time,status\n") == DataErrorKind::EmptySample);
  CHECK(error_kind("") == DataErrorKind::MalformedRow);
}

TEST_CASE("malformed row reports its line") {
  try {
    load_csv_text("time,status\n1,1\n2,x\n");
    FAIL("expected error");
  } catch (const DataError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("summarize hand-counted fixtures") {
  const auto a = summarize(load_csv_text("time,status\n1,1\n2,0\n3,1"));
  CHECK(a.n == 3);
  CHECK(a.n_events == 2);
  CHECK(a.censoring_rate == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(a.t_max == 3);
  CHECK(a.t_max_event == 3);
  CHECK(a.median_event_time == 2);
  CHECK(a.plateau_censored_count == 0);

  const auto b = summarize(load_csv_text("time,status\n1,1\n2,1\n3,0\n4,0"));
  CHECK(b.t_max == 4);
  CHECK(b.t_max_event == 2);
  CHECK(b.plateau_censored_count == 2);

  const auto all_events = summarize(load_csv_text("time,status\n5,1\n1,1"));
  CHECK(all_events.censoring_rate == 0.0);

  const auto none = summarize(load_csv_text("time,status\n5,0\n1,0"));
  CHECK_FALSE(none.t_max_event.has_value());
  CHECK_FALSE(none.median_event_time.has_value());
  CHECK(none.censoring_rate == 1.0);
}

TEST_CASE("from_sorted refuses unsorted input") {
  CHECK_THROWS_AS(SurvivalSample::from_sorted({{2, Status::Event}, {1, Status::Event}}), std::invalid_argument);
  CHECK_THROWS_AS(SurvivalSample::from_sorted({{1, Status::Censored}, {1, Status::Event}}), std::invalid_argument);
  CHECK_NOTHROW(SurvivalSample::from_sorted({{1, Status::Event}, {1, Status::Censored}}));
}

TEST_CASE("property: permutation invariance, count identities, CSV round trip") {
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<int> size(1, 60);
  std::uniform_int_distribution<int> grid(1, 40);  // coarse grid forces ties
  std::uniform_real_distribution<double> cont(0.001, 30.0);
  std::bernoulli_distribution coin(0.6);

  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Observation> obs(static_cast<std::size_t>(size(gen)));
    for (auto& o : obs) {
      o.time = iter % 2 ? grid(gen) * 0.25 : cont(gen);
      o.status = coin(gen) ? Status::Event : Status::Censored;
    }
    const SurvivalSample s(obs);
    std::shuffle(obs.begin(), obs.end(), gen);
    const SurvivalSample t(obs);
    CHECK(s == t);

    const auto sum = summarize(s);
    CHECK(sum == summarize(t));
    CHECK(sum.n_events + (sum.n - sum.n_events) == sum.n);
    CHECK(sum.censoring_rate >= 0.0);
    CHECK(sum.censoring_rate <= 1.0);
    if (sum.t_max_event) CHECK(*sum.t_max_event <= sum.t_max);

    std::ostringstream out;
    write_csv(s, out);
    CHECK(load_csv_text(out.str()) == s);
  }
}
