#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "memos/adders.hpp"
#include "memos/models.hpp"
#include "memos/netlist.hpp"
#include "memos/sd.hpp"

namespace memos {

enum class Mode { Static, Dynamic };
const char* mode_name(Mode m);
Mode mode_from_string(const std::string& s);

// AND and OR ratioed blocks differ only by device orientation: the OR block's
// devices turn on under input-above-node polarity, the AND block's under the
// reverse. Pull direction was validated against the block truth tables at low
// frequency, not inferred from a schematic.
enum class BlockKind { And, Or };

struct ClockConfig {
  double frequency = 1e6;  // Hz, one settle window of 1/f per block level
  double vdd = 1.8;        // restorer rails
  double v_drive = 0;      // logic-1 input level; 0 means "use vdd"
  Mode mode = Mode::Static;
  int steps_per_window = 200;  // Euler steps per settle window

  double drive() const { return v_drive > 0 ? v_drive : vdd; }
  double dt() const { return 1.0 / frequency / steps_per_window; }
};

// conductance-weighted node voltage of the two-memristor divider
// (zero-load: the restoring element draws no current)
inline double divider_voltage(double g1, double v1, double g2, double v2) {
  return (g1 * v1 + g2 * v2) / (g1 + g2);
}

struct Restored {
  double v;
  bool metastable;
};

// Threshold restoring element: above 0.7*vdd and below 0.3*vdd it snaps to
// the rails (swapped when inverting); inside the band it holds the previous
// output and reports metastability.
Restored restoring_element(double v_in, double vdd, bool invert, double prev_out);

struct MeMOSBlock {
  BlockKind kind;
  bool invert_output;  // restoring element inverts (NAND/NOR) or buffers
  MemristorDevice dev1, dev2;
  int in1, in2;  // node ids
};

struct TraceRow {
  double time_s;
  int block_id;
  double node_v;
  double w1, w2;
  double energy_j;  // cumulative for this block
};

struct StructureReport {
  int and_blocks = 0;
  int or_blocks = 0;
  int restoring_inverters = 0;  // one per block
  int input_inverters = 0;      // standalone restoring elements (NOT gates)
  int levels = 0;
  std::string text() const;
};

struct EvalResult {
  SDNumber outputs;
  double energy = 0;    // J, sum over blocks; restoring elements excluded
  double latency = 0;   // s, block_depth / f by convention
  bool correct = false;
  bool metastable = false;
  bool valid_coding = true;
  bool guard_ok = true;
};

// A MeMOS realization of a lowered netlist: one two-memristor divider block
// per NAND/NOR, a restoring element per block, a standalone restoring
// element per NOT. Levels are evaluated in topological order, one settle
// window each; a block's devices advance only during its own window.
class MeMOSCircuit {
 public:
  MeMOSCircuit(const AdderNetlist& adder, ModelKind model, const ModelParams& params,
               uint64_t seed = 0);
  // generic netlist constructor (no operand interface)
  MeMOSCircuit(const Netlist& netlist, ModelKind model, const ModelParams& params,
               uint64_t seed = 0);

  // devices back to 0.5, restorer memories cleared
  void reset();

  // adder interface; Static mode resets first. Throws WidthMismatch.
  EvalResult evaluate(const SDNumber& a, const SDNumber& b, const ClockConfig& clk,
                      std::vector<TraceRow>* trace = nullptr);

  // generic interface for arbitrary netlists
  std::map<std::string, bool> run(const std::map<std::string, bool>& inputs,
                                  const ClockConfig& clk, std::vector<TraceRow>* trace = nullptr);

  StructureReport structure() const;
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int level_count() const { return levels_; }
  int width() const { return width_; }
  int steps() const { return steps_; }

  struct StreamResult {
    std::vector<EvalResult> results;
    double mean_energy = 0;
    int error_count = 0;
  };
  // Static mode resets before every pair (independent, parallelizable);
  // Dynamic mode streams pairs through the same devices with no resets.
  StreamResult run_stream(const std::vector<std::pair<SDNumber, SDNumber>>& pairs,
                          const ClockConfig& clk, int jobs = 1) const;

 private:
  struct Node {
    enum class Kind : uint8_t { Source, Block, Inverter } kind;
    int block = -1;   // Block nodes: index into blocks_
    int in = -1;      // Inverter nodes: driving node
    bool const_bit = false;
    bool is_const = false;
    int level = 0;    // block-depth level; sources 0, inverters inherit
    double v = 0;
    double prev_out = 0;
    bool metastable = false;
  };

  void build(const Netlist& netlist, ModelKind model, const ModelParams& params, uint64_t seed);
  void run_levels(const ClockConfig& clk, std::vector<TraceRow>* trace, double& energy,
                  bool& metastable);

  std::vector<Node> nodes_;
  std::vector<MeMOSBlock> blocks_;
  std::vector<int> input_nodes_;           // netlist input order
  std::map<std::string, int> input_by_name_;
  std::map<std::string, int> output_by_name_;
  int levels_ = 0;

  // adder metadata (width_ == 0 for generic circuits)
  int width_ = 0;
  int out_width_ = 0;
  int steps_ = 0;
  bool has_guard_ = false;
};

}  // namespace memos
