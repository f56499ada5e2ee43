#include "memos/circuit.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "memos/util.hpp"

namespace memos {

const char* mode_name(Mode m) { return m == Mode::Static ? "static" : "dynamic"; }

Mode mode_from_string(const std::string& s) {
  if (s == "static") return Mode::Static;
  if (s == "dynamic") return Mode::Dynamic;
  throw IoFailure("unknown mode '" + s + "'");
}

Restored restoring_element(double v_in, double vdd, bool invert, double prev_out) {
  double hi = invert ? 0.0 : vdd;
  double lo = invert ? vdd : 0.0;
  if (v_in > 0.7 * vdd) return {hi, false};
  if (v_in < 0.3 * vdd) return {lo, false};
  return {prev_out, true};
}

MeMOSCircuit::MeMOSCircuit(const AdderNetlist& adder, ModelKind model, const ModelParams& params,
                           uint64_t seed) {
  width_ = adder.width;
  out_width_ = adder.out_width;
  steps_ = adder.steps;
  has_guard_ = adder.has_guard;
  build(adder.netlist, model, params, seed);
}

MeMOSCircuit::MeMOSCircuit(const Netlist& netlist, ModelKind model, const ModelParams& params,
                           uint64_t seed) {
  build(netlist, model, params, seed);
}

void MeMOSCircuit::build(const Netlist& netlist, ModelKind model, const ModelParams& params,
                         uint64_t seed) {
  if (!netlist.lowered())
    throw UnloweredGate("netlist still contains AND/OR/XOR gates; lower it first");
  nodes_.resize(netlist.gates().size());
  uint64_t device_index = 0;
  for (int id = 0; id < netlist.size(); ++id) {
    const Gate& g = netlist.gate(id);
    Node& n = nodes_[static_cast<size_t>(id)];
    switch (g.kind) {
      case GateKind::Input:
        n.kind = Node::Kind::Source;
        break;
      case GateKind::Const:
        n.kind = Node::Kind::Source;
        n.is_const = true;
        n.const_bit = g.a != 0;
        break;
      case GateKind::Not:
        n.kind = Node::Kind::Inverter;
        n.in = g.a;
        n.level = nodes_[static_cast<size_t>(g.a)].level;  // zero block cost
        break;
      case GateKind::Nand:
      case GateKind::Nor: {
        n.kind = Node::Kind::Block;
        n.block = static_cast<int>(blocks_.size());
        n.level = 1 + std::max(nodes_[static_cast<size_t>(g.a)].level,
                               nodes_[static_cast<size_t>(g.b)].level);
        BlockKind bk = g.kind == GateKind::Nand ? BlockKind::And : BlockKind::Or;
        // RNG streams are per device, derived from (seed, device index)
        MemristorDevice d1(model, params, derive_seed(seed, device_index++));
        MemristorDevice d2(model, params, derive_seed(seed, device_index++));
        blocks_.push_back(MeMOSBlock{bk, true, d1, d2, g.a, g.b});
        break;
      }
      default:
        throw UnloweredGate("unexpected gate kind in lowered netlist");
    }
    levels_ = std::max(levels_, n.level);
  }
  input_nodes_ = netlist.input_order();
  input_by_name_ = netlist.inputs();
  output_by_name_ = netlist.outputs();
}

void MeMOSCircuit::reset() {
  for (auto& b : blocks_) {
    b.dev1.reset();
    b.dev2.reset();
  }
  for (auto& n : nodes_) {
    n.prev_out = 0;
    n.metastable = false;
    if (n.kind != Node::Kind::Source) n.v = 0;
  }
}

void MeMOSCircuit::run_levels(const ClockConfig& clk, std::vector<TraceRow>* trace,
                              double& energy, bool& metastable) {
  const double dt = clk.dt();
  const int steps = clk.steps_per_window;
  const double vmax = std::max(clk.vdd, clk.drive());
  energy = 0;
  metastable = false;
  for (auto& n : nodes_) n.metastable = false;

  // level 0 holds input inverters (instantaneous); blocks start at level 1
  for (int level = 0; level <= levels_; ++level) {
    const double window_start = static_cast<double>(level - 1) / clk.frequency;
    for (size_t id = 0; id < nodes_.size(); ++id) {
      Node& n = nodes_[id];
      if (n.level != level || n.kind == Node::Kind::Source) continue;
      if (n.kind == Node::Kind::Inverter) {
        Restored r = restoring_element(nodes_[static_cast<size_t>(n.in)].v, clk.vdd, true,
                                       n.prev_out);
        n.v = r.v;
        n.metastable = r.metastable;
        if (!r.metastable) n.prev_out = r.v;
        metastable |= r.metastable;
        continue;
      }
      MeMOSBlock& b = blocks_[static_cast<size_t>(n.block)];
      const double v1 = nodes_[static_cast<size_t>(b.in1)].v;
      const double v2 = nodes_[static_cast<size_t>(b.in2)].v;
      // AND blocks have both device orientations reversed relative to OR
      const double sign = b.kind == BlockKind::Or ? 1.0 : -1.0;
      double block_energy = 0;
      double node_v = 0;
      for (int s = 0; s < steps; ++s) {
        double g1 = b.dev1.conductance();
        double g2 = b.dev2.conductance();
        node_v = divider_voltage(g1, v1, g2, v2);
        assert(node_v >= -1e-9 && node_v <= vmax + 1e-9);
        auto r1 = b.dev1.step(sign * (v1 - node_v), dt);
        auto r2 = b.dev2.step(sign * (v2 - node_v), dt);
        block_energy += r1.energy + r2.energy;
        if (trace)
          trace->push_back(TraceRow{window_start + (s + 1) * dt, n.block, node_v, r1.w, r2.w,
                                    block_energy});
      }
      energy += block_energy;
      Restored r = restoring_element(node_v, clk.vdd, b.invert_output, n.prev_out);
      n.v = r.v;
      n.metastable = r.metastable;
      if (!r.metastable) n.prev_out = r.v;
      metastable |= r.metastable;
    }
  }
  (void)vmax;
}

EvalResult MeMOSCircuit::evaluate(const SDNumber& a, const SDNumber& b, const ClockConfig& clk,
                                  std::vector<TraceRow>* trace) {
  if (width_ == 0) throw WidthMismatch("circuit was not built from an adder netlist");
  if (a.width() != width_ || b.width() != width_)
    throw WidthMismatch("operand width does not match the circuit");
  if (clk.mode == Mode::Static) reset();

  const double one = clk.drive();
  size_t next = 0;
  auto set_pair = [&](const SDNumber& x, int i) {
    NPPair c = encode_trit(x.digit(i));
    nodes_[static_cast<size_t>(input_nodes_[next++])].v = c.n ? one : 0.0;
    nodes_[static_cast<size_t>(input_nodes_[next++])].v = c.p ? one : 0.0;
  };
  for (int i = 0; i < width_; ++i) set_pair(a, i);
  for (int i = 0; i < width_; ++i) set_pair(b, i);
  for (auto& n : nodes_)
    if (n.is_const) n.v = n.const_bit ? one : 0.0;

  EvalResult res{SDNumber::zero(out_width_)};
  run_levels(clk, trace, res.energy, res.metastable);
  res.latency = static_cast<double>(steps_) / clk.frequency;

  const double half = 0.5 * clk.vdd;
  std::vector<Trit> digits(static_cast<size_t>(out_width_), Trit::Zero);
  for (int i = 0; i < out_width_; ++i) {
    double vn = nodes_[static_cast<size_t>(output_by_name_.at("s" + std::to_string(i) + ".n"))].v;
    double vp = nodes_[static_cast<size_t>(output_by_name_.at("s" + std::to_string(i) + ".p"))].v;
    NPPair c{vn > half, vp > half};
    if (c.n && c.p) {
      res.valid_coding = false;
      digits[static_cast<size_t>(i)] = Trit::Zero;
    } else {
      digits[static_cast<size_t>(i)] = decode_np(c);
    }
  }
  if (has_guard_) {
    double gn = nodes_[static_cast<size_t>(output_by_name_.at("guard.n"))].v;
    double gp = nodes_[static_cast<size_t>(output_by_name_.at("guard.p"))].v;
    res.guard_ok = gn <= half && gp <= half;
  }
  res.outputs = SDNumber(std::move(digits));
  res.correct = res.valid_coding && res.guard_ok && !res.metastable &&
                represents_sum(a, b, res.outputs);
  return res;
}

std::map<std::string, bool> MeMOSCircuit::run(const std::map<std::string, bool>& inputs,
                                              const ClockConfig& clk,
                                              std::vector<TraceRow>* trace) {
  if (clk.mode == Mode::Static) reset();
  const double one = clk.drive();
  for (const auto& [name, id] : input_by_name_) {
    auto it = inputs.find(name);
    if (it == inputs.end()) throw MissingInput("no value for input " + name);
    nodes_[static_cast<size_t>(id)].v = it->second ? one : 0.0;
  }
  for (auto& n : nodes_)
    if (n.is_const) n.v = n.const_bit ? one : 0.0;

  double energy = 0;
  bool metastable = false;
  run_levels(clk, trace, energy, metastable);

  const double half = 0.5 * clk.vdd;
  std::map<std::string, bool> out;
  for (const auto& [name, id] : output_by_name_) out[name] = nodes_[static_cast<size_t>(id)].v > half;
  return out;
}

StructureReport MeMOSCircuit::structure() const {
  StructureReport rep;
  rep.levels = levels_;
  for (const auto& b : blocks_) {
    if (b.kind == BlockKind::And) ++rep.and_blocks;
    else ++rep.or_blocks;
    if (b.invert_output) ++rep.restoring_inverters;
  }
  for (const auto& n : nodes_)
    if (n.kind == Node::Kind::Inverter) ++rep.input_inverters;
  return rep;
}

std::string StructureReport::text() const {
  std::ostringstream os;
  os << "MeMOS structure census\n";
  os << "  AND blocks:            " << and_blocks << "\n";
  os << "  OR blocks:             " << or_blocks << "\n";
  os << "  restoring inverters:   " << restoring_inverters
     << " (one per block; NAND/NOR realized as AND/OR + inverting restore)\n";
  os << "  standalone inverters:  " << input_inverters << " (NOT gates)\n";
  os << "  block levels:          " << levels << "\n";
  return os.str();
}

MeMOSCircuit::StreamResult MeMOSCircuit::run_stream(
    const std::vector<std::pair<SDNumber, SDNumber>>& pairs, const ClockConfig& clk,
    int jobs) const {
  StreamResult out;
  out.results.resize(pairs.size(), EvalResult{SDNumber::zero(std::max(out_width_, 1))});
  if (clk.mode == Mode::Static) {
    // independent evaluations: one circuit clone per chunk, merged by index
    size_t chunks = jobs <= 1 ? 1 : std::min<size_t>(static_cast<size_t>(jobs) * 4, pairs.size());
    size_t per = (pairs.size() + chunks - 1) / std::max<size_t>(chunks, 1);
    parallel_for(chunks, jobs, [&](size_t c) {
      MeMOSCircuit clone = *this;
      size_t lo = c * per, hi = std::min(pairs.size(), lo + per);
      for (size_t i = lo; i < hi; ++i)
        out.results[i] = clone.evaluate(pairs[i].first, pairs[i].second, clk);
    });
  } else {
    MeMOSCircuit streaming = *this;
    for (size_t i = 0; i < pairs.size(); ++i)
      out.results[i] = streaming.evaluate(pairs[i].first, pairs[i].second, clk);
  }
  double total = 0;
  for (const auto& r : out.results) {
    total += r.energy;
    if (!r.correct) ++out.error_count;
  }
  out.mean_energy = pairs.empty() ? 0 : total / static_cast<double>(pairs.size());
  return out;
}

}  // namespace memos
