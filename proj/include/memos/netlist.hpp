#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "memos/boolexpr.hpp"
#include "memos/errors.hpp"

namespace memos {

enum class GateKind : uint8_t { Input, Const, Not, And, Or, Xor, Nand, Nor };

const char* gate_kind_name(GateKind k);

struct Gate {
  GateKind kind;
  int a = -1;  // first fanin; Const stores its value here (0/1)
  int b = -1;  // second fanin (two-input gates only)
  int level = 0;
  std::string name;  // Input only
};

// Leveled gate graph. Gates are stored in topological order (fanins always
// precede consumers); ids are stable construction order so dumps diff cleanly.
// add_gate folds constants and hashes structurally, so equal subtrees share
// one gate.
class Netlist {
 public:
  int add_input(const std::string& name);
  int add_const(bool v);
  int add_not(int a);
  int add_gate(GateKind kind, int a, int b);
  void set_output(const std::string& name, int id);

  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int id) const { return gates_[static_cast<size_t>(id)]; }
  const std::map<std::string, int>& inputs() const { return inputs_; }
  const std::map<std::string, int>& outputs() const { return outputs_; }
  const std::vector<int>& input_order() const { return input_order_; }

  int size() const { return static_cast<int>(gates_.size()); }
  int gate_count() const;  // logic gates only (Not and two-input kinds)
  int levels() const;
  bool lowered() const;  // only Input/Const/Not/Nand/Nor present

  // level-order evaluation; assignment must cover every input
  std::map<std::string, bool> eval(const std::map<std::string, bool>& assignment) const;
  // fast path: values in input_order(); returns one value per gate id
  std::vector<uint8_t> eval_values(const std::vector<uint8_t>& input_values) const;

  void dump(std::ostream& os) const;
  std::string dump_string() const;
  static Netlist parse(std::istream& is);  // accepts the dump format verbatim

 private:
  int intern(Gate g);

  std::vector<Gate> gates_;
  std::vector<int> input_order_;
  std::map<std::string, int> inputs_;
  std::map<std::string, int> outputs_;
  std::map<std::tuple<int, int, int>, int> cache_;  // (kind, a, b) -> id
  int const_id_[2] = {-1, -1};
};

// Instantiates an expression over existing gates; env maps variable names to
// gate ids. The memo must be fresh per env; it holds references, so node
// addresses cannot be reused while it lives.
int emit_expr(Netlist& nl, const Expr& e, const std::map<std::string, int>& env,
              std::map<Expr, int>& memo);

}  // namespace memos
