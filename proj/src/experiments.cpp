#include "memos/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "memos/util.hpp"

namespace memos {

std::vector<double> log_grid(double f_lo, double f_hi, int points_per_decade) {
  if (!(f_lo > 0 && f_hi > f_lo) || points_per_decade < 1)
    throw IoFailure("bad frequency grid bounds");
  std::vector<double> grid;
  double step = std::pow(10.0, 1.0 / points_per_decade);
  for (double f = f_lo; f < f_hi * (1.0 + 1e-12); f *= step) grid.push_back(f);
  if (grid.back() < f_hi) grid.push_back(f_hi);
  return grid;
}

std::vector<double> default_grid() { return log_grid(1e3, 1e10, 10); }

namespace {

std::vector<std::pair<SDNumber, SDNumber>> validation_pairs(int width, int count, uint64_t seed) {
  SDGenerator gen(seed);
  std::vector<std::pair<SDNumber, SDNumber>> pairs;
  pairs.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) pairs.push_back(gen.next_pair(width));
  return pairs;
}

ClockConfig clock_for(const SweepSpec& spec, double f) {
  ClockConfig clk;
  clk.frequency = f;
  clk.vdd = spec.vdd;
  clk.v_drive = spec.v_drive;
  clk.mode = spec.mode;
  return clk;
}

// true iff every validation pair evaluates correctly at frequency f
bool probe(const MeMOSCircuit& circuit, const SweepSpec& spec,
           const std::vector<std::pair<SDNumber, SDNumber>>& pairs, double f) {
  ClockConfig clk = clock_for(spec, f);
  if (spec.mode == Mode::Static) {
    // early exit on the first failure, chunk by chunk
    const size_t chunk = 16;
    MeMOSCircuit clone = circuit;
    for (size_t lo = 0; lo < pairs.size(); lo += chunk) {
      size_t hi = std::min(pairs.size(), lo + chunk);
      if (spec.jobs > 1) {
        std::vector<std::pair<SDNumber, SDNumber>> slice(pairs.begin() + static_cast<long>(lo),
                                                         pairs.begin() + static_cast<long>(hi));
        if (circuit.run_stream(slice, clk, spec.jobs).error_count > 0) return false;
      } else {
        for (size_t i = lo; i < hi; ++i)
          if (!clone.evaluate(pairs[i].first, pairs[i].second, clk).correct) return false;
      }
    }
    return true;
  }
  MeMOSCircuit streaming = circuit;  // fresh history per probe
  for (const auto& [a, b] : pairs)
    if (!streaming.evaluate(a, b, clk).correct) return false;
  return true;
}

}  // namespace

double find_cutoff_frequency(const SweepSpec& spec, const ModelParams& params) {
  if (spec.grid.size() < 2 || !std::is_sorted(spec.grid.begin(), spec.grid.end()))
    throw IoFailure("frequency grid must be ascending");
  if (spec.grid.back() / spec.grid.front() < 1e4 * (1.0 - 1e-9))
    throw IoFailure("frequency grid must span at least 4 decades");

  MeMOSCircuit circuit(build_adder(spec.family, spec.width), spec.model, params, spec.seed);
  auto pairs = validation_pairs(spec.width, spec.pairs, spec.seed);

  if (!probe(circuit, spec, pairs, spec.grid.front()))
    throw NoPassingFrequency("validation fails even at " + std::to_string(spec.grid.front()) +
                             " Hz; model calibration or drive voltage is off");
  if (probe(circuit, spec, pairs, spec.grid.back())) return spec.grid.back();

  // binary search for the first failing grid point (monotone failure assumed)
  size_t lo = 0, hi = spec.grid.size() - 1;  // grid[lo] passes, grid[hi] fails
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (probe(circuit, spec, pairs, spec.grid[mid])) lo = mid;
    else hi = mid;
  }
  double f_pass = spec.grid[lo], f_fail = spec.grid[hi];
  // geometric bisection down to 5% relative precision
  while (f_fail / f_pass > 1.05) {
    double mid = std::sqrt(f_pass * f_fail);
    if (probe(circuit, spec, pairs, mid)) f_pass = mid;
    else f_fail = mid;
  }
  return f_pass;
}

bool check_monotone_failure(const SweepSpec& spec, const ModelParams& params,
                            std::string* diagnostic) {
  MeMOSCircuit circuit(build_adder(spec.family, spec.width), spec.model, params, spec.seed);
  auto pairs = validation_pairs(spec.width, spec.pairs, spec.seed);
  bool seen_fail = false;
  for (double f : spec.grid) {
    bool ok = probe(circuit, spec, pairs, f);
    if (ok && seen_fail) {
      if (diagnostic) {
        std::ostringstream os;
        os << "correctness is not monotone: " << f << " Hz passes after a lower point failed";
        *diagnostic = os.str();
      }
      return false;
    }
    if (!ok) seen_fail = true;
  }
  return true;
}

double ed_product(double latency_s, double energy_j) { return latency_s * energy_j; }

Baseline cmos_ternary_baseline() { return {"cmos-ternary-memristor-registers", 3e-9, 10e-12, 40}; }

BaselineComparison compare_baseline(const ReportRow& row, const Baseline& base) {
  if (row.width != base.width)
    throw WidthMismatch("comparison requires the same digit width basis");
  BaselineComparison c{};
  c.latency_ratio = row.latency_s / base.latency_s;
  c.energy_ratio = row.energy_j / base.energy_j;
  double base_ed = ed_product(base.latency_s, base.energy_j);
  c.ed_ratio = ed_product(row.latency_s, row.energy_j) / base_ed;
  if (c.ed_ratio < 1.0) c.verdict = "candidate preferred (lower ED product)";
  else if (c.ed_ratio > 1.0) c.verdict = "baseline preferred (lower ED product)";
  else c.verdict = "parity";
  return c;
}

std::string BaselineComparison::text() const {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "latency ratio %.4g  energy ratio %.4g  ED ratio %.4g  -> %s",
                latency_ratio, energy_ratio, ed_ratio, verdict.c_str());
  os << buf;
  return os.str();
}

double dynamic_drive_voltage(ModelKind model) {
  switch (model) {
    case ModelKind::Team: return 6.0;
    case ModelKind::Vteam: return 4.0;
    default: return 1.8;  // no published dynamic preset; extension coverage
  }
}

namespace {

ReportRow base_row(AdderFamily family, ModelKind model, Mode mode, const ModelParams& params,
                   uint64_t seed) {
  ReportRow row;
  row.family = family_name(family);
  row.model = model_name(model);
  row.mode = mode_name(mode);
  row.seed = seed;
  row.param_hash = params_hash(params);
  return row;
}

}  // namespace

EvalReport run_static_eval(AdderFamily family, ModelKind model, const ModelParams& params,
                           double vdd, int width, int pairs, uint64_t seed, int jobs) {
  SweepSpec spec;
  spec.family = family;
  spec.model = model;
  spec.mode = Mode::Static;
  spec.grid = default_grid();
  spec.vdd = vdd;
  spec.width = width;
  spec.pairs = pairs;
  spec.seed = seed;
  spec.jobs = jobs;
  double f_max = find_cutoff_frequency(spec, params);

  MeMOSCircuit circuit(build_adder(family, width), model, params, seed);
  ClockConfig clk = clock_for(spec, f_max);
  auto stream = circuit.run_stream(validation_pairs(width, pairs, seed), clk, jobs);

  ReportRow row = base_row(family, model, Mode::Static, params, seed);
  row.f_max_hz = f_max;
  row.latency_s = circuit.steps() / f_max;
  row.energy_j = stream.mean_energy;
  row.ed_js = ed_product(row.latency_s, row.energy_j);
  row.width = width;
  return EvalReport{{row}};
}

EvalReport run_dynamic_eval(AdderFamily family, ModelKind model, const ModelParams& params,
                            double v_drive, const std::vector<int>& widths, int pairs,
                            uint64_t seed, int jobs, double static_fmax_same_voltage) {
  if (widths.empty()) throw IoFailure("dynamic evaluation needs at least one width");
  int search_width = *std::min_element(widths.begin(), widths.end());

  SweepSpec spec;
  spec.family = family;
  spec.model = model;
  spec.mode = Mode::Dynamic;
  spec.grid = default_grid();
  spec.vdd = v_drive;  // restored rails follow the drive level
  spec.v_drive = v_drive;
  spec.width = search_width;
  spec.pairs = std::min(pairs, 100);  // search set; full set streams below
  spec.seed = seed;
  spec.jobs = jobs;
  double f_max = find_cutoff_frequency(spec, params);

  // history effects must not raise the cut-off; allow one bisection step of
  // slack since both searches stop at 5% relative precision
  if (static_fmax_same_voltage > 0 && f_max > 1.05 * static_fmax_same_voltage)
    throw IoFailure("dynamic cut-off " + std::to_string(f_max) +
                    " Hz exceeds the static cut-off at the same voltage; "
                    "device history should reduce the switching margin");

  EvalReport report;
  for (int width : widths) {
    MeMOSCircuit circuit(build_adder(family, width), model, params, seed);
    ClockConfig clk = clock_for(spec, f_max);
    auto stream = circuit.run_stream(validation_pairs(width, pairs, derive_seed(seed, width)),
                                     clk, jobs);
    ReportRow row = base_row(family, model, Mode::Dynamic, params, seed);
    row.f_max_hz = f_max;
    row.latency_s = circuit.steps() / f_max;
    row.energy_j = stream.mean_energy;
    row.ed_js = ed_product(row.latency_s, row.energy_j);
    row.width = width;
    row.extension = model == ModelKind::KnowmDeterministic || model == ModelKind::KnowmStochastic;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

template <typename T>
T parse_number(const std::string& val, int lineno) {
  try {
    if constexpr (std::is_same_v<T, uint64_t>) return std::stoull(val);
    else if constexpr (std::is_same_v<T, int>) return std::stoi(val);
    else return std::stod(val);
  } catch (...) {
    throw IoFailure("spec line " + std::to_string(lineno) + ": bad number '" + val + "'");
  }
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& is) {
  ExperimentSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw IoFailure("spec line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(body.substr(0, eq));
    std::string val = trim(body.substr(eq + 1));
    try {
      if (key == "family") spec.family = family_from_string(val);
      else if (key == "model") spec.model = model_from_string(val);
      else if (key == "mode") spec.mode = mode_from_string(val);
      else if (key == "vdd") spec.vdd = parse_number<double>(val, lineno);
      else if (key == "v_drive") spec.v_drive = parse_number<double>(val, lineno);
      else if (key == "width") spec.width = parse_number<int>(val, lineno);
      else if (key == "pairs") spec.pairs = parse_number<int>(val, lineno);
      else if (key == "seed") spec.seed = parse_number<uint64_t>(val, lineno);
      else if (key == "f_lo") spec.f_lo = parse_number<double>(val, lineno);
      else if (key == "f_hi") spec.f_hi = parse_number<double>(val, lineno);
      else if (key == "points_per_decade")
        spec.points_per_decade = parse_number<int>(val, lineno);
      else if (key == "widths") {
        spec.widths.clear();
        for (const auto& w : split(val, ','))
          spec.widths.push_back(parse_number<int>(trim(w), lineno));
      } else {
        throw IoFailure("spec line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const IoFailure&) {
      throw;
    } catch (const std::exception& e) {
      throw IoFailure("spec line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open spec file " + path);
  return parse_experiment_spec(in);
}

}  // namespace memos
