#include <charconv>
#include <array>

#include "suffup/scenario_sim.hpp"

namespace suffup {

namespace {

// Column order inside a table half: (3 or 3.5, p=.9), (.., p=.7), (2.5 or 3, .9), ...
struct TableHalf {
  std::array<double, 4> parameters;
  std::array<double, 8> censoring_header;
  std::array<std::array<double, 8>, 4> rates;  // rows: n = 400, 800, 1200, 1800
};

struct TableData {
  Distribution failure;
  TableHalf h0;
  TableHalf h1;
};

const std::array<double, 4> kLambda{3.0, 2.5, 2.0, 1.5};
const std::array<double, 4> kMu{3.5, 3.0, 2.5, 2.0};

// Table 1 uses the literal Weibull(1.5, 1.5). Its reference rejection rates
// are reproduced under this law, but its censoring headers are lower than the
// rates it actually produces (about 0.40 against 0.27 for the first column).
std::array<TableData, 3> make_tables() {
  return {{
      {Weibull{1.5, 1.5},
       {kLambda,
        {.27, .43, .30, .45, .33, .48, .39, .52},
        {{{.036, .067, .041, .056, .049, .043, .106, .038},
          {.052, .053, .043, .053, .033, .042, .061, .031},
          {.058, .047, .055, .057, .045, .044, .035, .031},
          {.043, .047, .058, .047, .038, .048, .038, .038}}}},
       {kMu,
        {.28, .44, .31, .46, .34, .49, .40, .53},
        {{{.711, .134, .860, .361, .922, .640, .852, .652},
          {.930, .400, .971, .538, .973, .725, .930, .811},
          {.990, .812, .992, .812, .990, .891, .971, .908},
          {.996, .939, .996, .957, .994, .985, .974, .942}}}}},
      {Exponential{1.0},
       {kLambda,
        {.33, .47, .36, .50, .40, .53, .46, .58},
        {{{.053, .049, .038, .043, .055, .049, .086, .035},
          {.043, .057, .046, .054, .036, .044, .045, .023},
          {.054, .047, .042, .051, .046, .047, .042, .038},
          {.066, .046, .039, .040, .040, .042, .032, .035}}}},
       {kMu,
        {.35, .50, .38, .52, .43, .56, .49, .60},
        {{{.266, .026, .341, .051, .486, .108, .536, .197},
          {.496, .075, .624, .111, .705, .139, .747, .178},
          {.817, .443, .898, .476, .938, .467, .942, .392},
          {.956, .776, .981, .789, .992, .759, .995, .695}}}}},
      {Lognormal{0.0, 1.0},
       {kLambda,
        {.41, .54, .44, .57, .50, .61, .56, .66},
        {{{.069, .036, .056, .031, .089, .033, .138, .056},
          {.043, .037, .047, .033, .073, .034, .125, .029},
          {.038, .034, .040, .027, .055, .029, .086, .029},
          {.032, .018, .044, .031, .050, .021, .096, .021}}}},
       {kMu,
        {.45, .57, .49, .60, .54, .64, .60, .69},
        {{{.258, .047, .310, .094, .384, .129, .483, .218},
          {.544, .108, .590, .114, .620, .124, .647, .196},
          {.885, .509, .878, .482, .899, .444, .884, .327},
          {.966, .790, .972, .795, .978, .768, .977, .676}}}}},
  }};
}

std::vector<PresetCell> build_presets() {
  std::vector<PresetCell> cells;
  const auto tables = make_tables();
  for (int t = 0; t < 3; ++t) {
    for (const Hypothesis h : {Hypothesis::H0, Hypothesis::H1}) {
      const TableHalf& half = h == Hypothesis::H0 ? tables[t].h0 : tables[t].h1;
      for (std::size_t col = 0; col < 8; ++col) {
        PresetCell cell;
        cell.table = t + 1;
        cell.hypothesis = h;
        cell.censoring_parameter = half.parameters[col / 2];
        cell.p = col % 2 == 0 ? 0.9 : 0.7;
        cell.failure = tables[t].failure;
        if (h == Hypothesis::H0) cell.censoring = Weibull{1.0, cell.censoring_parameter};
        else cell.censoring = Uniform{0.0, cell.censoring_parameter};
        cell.expected_censoring_rate = half.censoring_header[col];
        for (std::size_t row = 0; row < 4; ++row) cell.reference_rates[row] = half.rates[row][col];
        cells.push_back(cell);
      }
    }
  }
  return cells;
}

std::size_t parse_size(std::string_view text, std::string_view name) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw SpecError("bad sample size in preset '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

std::string PresetCell::name() const {
  return "table" + std::to_string(table) + (hypothesis == Hypothesis::H0 ? ":h0:lambda" : ":h1:mu") +
         format_double(censoring_parameter) + ":p" + format_double(p);
}

Scenario PresetCell::scenario(std::size_t n) const {
  Scenario s;
  s.failure = failure;
  s.censoring = censoring;
  s.p = p;
  s.n = n;
  s.label = name() + ":n" + std::to_string(n);
  return s;
}

std::optional<double> PresetCell::reference_rate(std::size_t n) const {
  for (std::size_t i = 0; i < preset_sample_sizes.size(); ++i) {
    if (preset_sample_sizes[i] == n) return reference_rates[i];
  }
  return std::nullopt;
}

const std::vector<PresetCell>& preset_scenarios() {
  static const std::vector<PresetCell> cells = build_presets();
  return cells;
}

ResolvedPreset resolve_preset(std::string_view name) {
  std::string_view cell_name = name;
  std::optional<std::size_t> n;
  const auto last = name.rfind(':');
  if (last != std::string_view::npos && name.substr(last + 1).starts_with('n')) {
    n = parse_size(name.substr(last + 2), name);
    cell_name = name.substr(0, last);
  }
  for (const auto& cell : preset_scenarios()) {
    if (cell.name() == cell_name) return {cell, n};
  }
  throw SpecError("unknown preset '" + std::string(name) + "'");
}

}  // namespace suffup
