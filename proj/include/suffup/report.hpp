#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "suffup/follow_up_test.hpp"
#include "suffup/scenario_sim.hpp"
#include "suffup/survival_data.hpp"

namespace suffup {

// JSON carries full precision; text output rounds to 4 decimals for display.

nlohmann::json to_json(const SampleSummary& summary);
nlohmann::json to_json(const TestResult& result);
nlohmann::json to_json(const AsymptoticDiagnostic& diagnostic);
nlohmann::json to_json(const Scenario& scenario);
nlohmann::json to_json(const MonteCarloConfig& config);
nlohmann::json to_json(const PowerReport& report);

std::string fixed4(double value);

std::string format_text(const SampleSummary& summary);
std::string format_text(const TestResult& result);
std::string format_text(const AsymptoticDiagnostic& diagnostic);
std::string format_text(const PowerReport& report);

}  // namespace suffup
