#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "memos/circuit.hpp"

namespace memos {

std::vector<double> log_grid(double f_lo, double f_hi, int points_per_decade = 10);
std::vector<double> default_grid();  // 1 kHz .. 10 GHz, 10 points per decade

struct SweepSpec {
  AdderFamily family = AdderFamily::Step3;
  ModelKind model = ModelKind::Team;
  Mode mode = Mode::Static;
  std::vector<double> grid;  // ascending, spanning at least 4 decades
  double vdd = 1.8;
  double v_drive = 0;  // 0: use vdd
  int width = 8;
  int pairs = 100;
  uint64_t seed = 0;
  int jobs = 1;
};

// Largest frequency with an error-free validation set, refined by geometric
// bisection between the last passing and first failing point to 5% relative
// precision. Throws NoPassingFrequency if even the lowest grid point fails.
double find_cutoff_frequency(const SweepSpec& spec, const ModelParams& params);

// True if correctness over the grid is a pass-prefix (monotone failure).
// Used by tests; production sweeps assume it and bisect.
bool check_monotone_failure(const SweepSpec& spec, const ModelParams& params,
                            std::string* diagnostic = nullptr);

struct ReportRow {
  std::string family, model, mode;
  double f_max_hz = 0;
  double latency_s = 0;
  double energy_j = 0;
  double ed_js = 0;
  int width = 0;
  uint64_t seed = 0;
  uint64_t param_hash = 0;
  bool extension = false;  // marks coverage beyond the calibrated preset matrix
};

struct EvalReport {
  std::vector<ReportRow> rows;
};

// Static protocol: devices reset before every operand pair; reports the
// cut-off frequency, latency = depth/f_max, and mean energy per addition.
EvalReport run_static_eval(AdderFamily family, ModelKind model, const ModelParams& params,
                           double vdd = 1.8, int width = 40, int pairs = 100, uint64_t seed = 0,
                           int jobs = 1);

// Dynamic protocol: a continuous operand stream with no resets, per width.
// The cut-off search runs at the smallest width; energies are averaged per
// width at that frequency. If static_fmax_same_voltage is nonzero the run
// aborts (IoFailure) when the dynamic cut-off is not below it.
EvalReport run_dynamic_eval(AdderFamily family, ModelKind model, const ModelParams& params,
                            double v_drive, const std::vector<int>& widths = {8, 16, 32, 64},
                            int pairs = 1000, uint64_t seed = 0, int jobs = 1,
                            double static_fmax_same_voltage = 0);

double ed_product(double latency_s, double energy_j);  // J*s

struct Baseline {
  std::string name;
  double latency_s;
  double energy_j;
  int width;
};
// Published figures for the ternary CMOS adder with memristor registers.
Baseline cmos_ternary_baseline();

struct BaselineComparison {
  double latency_ratio;
  double energy_ratio;
  double ed_ratio;
  std::string verdict;
  std::string text() const;
};
BaselineComparison compare_baseline(const ReportRow& row, const Baseline& base);  // WidthMismatch

// Table-replication drive voltages for the dynamic protocol. Knowm has no
// published dynamic preset; its runs use 1.8 V and are marked as extensions.
double dynamic_drive_voltage(ModelKind model);

struct ExperimentSpec {
  AdderFamily family = AdderFamily::Step3;
  ModelKind model = ModelKind::Team;
  Mode mode = Mode::Static;
  double vdd = 1.8;
  double v_drive = 0;
  int width = 40;
  std::vector<int> widths = {8, 16, 32, 64};
  int pairs = 100;
  uint64_t seed = 0;
  double f_lo = 1e3;
  double f_hi = 1e10;
  int points_per_decade = 10;
};
ExperimentSpec parse_experiment_spec(std::istream& is);  // errors carry line numbers
ExperimentSpec load_experiment_spec(const std::string& path);

}  // namespace memos
