#include "memos/netlist.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "memos/util.hpp"

namespace memos {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Input: return "INPUT";
    case GateKind::Const: return "CONST";
    case GateKind::Not: return "NOT";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Xor: return "XOR";
    case GateKind::Nand: return "NAND";
    case GateKind::Nor: return "NOR";
  }
  return "?";
}

namespace {

GateKind kind_from_name(const std::string& s) {
  if (s == "INPUT") return GateKind::Input;
  if (s == "CONST") return GateKind::Const;
  if (s == "NOT") return GateKind::Not;
  if (s == "AND") return GateKind::And;
  if (s == "OR") return GateKind::Or;
  if (s == "XOR") return GateKind::Xor;
  if (s == "NAND") return GateKind::Nand;
  if (s == "NOR") return GateKind::Nor;
  throw IoFailure("unknown gate kind '" + s + "'");
}

bool commutative(GateKind k) {
  switch (k) {
    case GateKind::And:
    case GateKind::Or:
    case GateKind::Xor:
    case GateKind::Nand:
    case GateKind::Nor: return true;
    default: return false;
  }
}

}  // namespace

int Netlist::intern(Gate g) {
  auto key = std::make_tuple(static_cast<int>(g.kind), g.a, g.b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  int id = size();
  gates_.push_back(std::move(g));
  cache_.emplace(key, id);
  return id;
}

int Netlist::add_input(const std::string& name) {
  auto it = inputs_.find(name);
  if (it != inputs_.end()) return it->second;
  int id = size();
  gates_.push_back(Gate{GateKind::Input, -1, -1, 0, name});
  inputs_.emplace(name, id);
  input_order_.push_back(id);
  return id;
}

int Netlist::add_const(bool v) {
  int& slot = const_id_[v ? 1 : 0];
  if (slot < 0) {
    slot = size();
    gates_.push_back(Gate{GateKind::Const, v ? 1 : 0, -1, 0, ""});
  }
  return slot;
}

int Netlist::add_not(int a) {
  const Gate& src = gate(a);
  if (src.kind == GateKind::Const) return add_const(src.a == 0);
  if (src.kind == GateKind::Not) return src.a;  // double negation
  Gate g{GateKind::Not, a, -1, src.level + 1, ""};
  return intern(g);
}

int Netlist::add_gate(GateKind kind, int a, int b) {
  if (kind == GateKind::Not) return add_not(a);
  if (kind == GateKind::Input || kind == GateKind::Const)
    throw IoFailure("add_gate expects a logic kind");

  auto is_const = [&](int id) { return gate(id).kind == GateKind::Const; };
  auto const_val = [&](int id) { return gate(id).a != 0; };

  // constant folding
  if (is_const(a) && is_const(b)) {
    bool va = const_val(a), vb = const_val(b), r = false;
    switch (kind) {
      case GateKind::And: r = va && vb; break;
      case GateKind::Or: r = va || vb; break;
      case GateKind::Xor: r = va != vb; break;
      case GateKind::Nand: r = !(va && vb); break;
      case GateKind::Nor: r = !(va || vb); break;
      default: break;
    }
    return add_const(r);
  }
  if (is_const(b)) std::swap(a, b);
  if (is_const(a)) {
    bool v = const_val(a);
    switch (kind) {
      case GateKind::And: return v ? b : add_const(false);
      case GateKind::Or: return v ? add_const(true) : b;
      case GateKind::Xor: return v ? add_not(b) : b;
      case GateKind::Nand: return v ? add_not(b) : add_const(true);
      case GateKind::Nor: return v ? add_const(false) : add_not(b);
      default: break;
    }
  }
  if (a == b) {
    switch (kind) {
      case GateKind::And:
      case GateKind::Or: return a;
      case GateKind::Xor: return add_const(false);
      case GateKind::Nand:
      case GateKind::Nor: return add_not(a);
      default: break;
    }
  }
  if (commutative(kind) && a > b) std::swap(a, b);
  int level = 1 + std::max(gate(a).level, gate(b).level);
  return intern(Gate{kind, a, b, level, ""});
}

void Netlist::set_output(const std::string& name, int id) { outputs_[name] = id; }

int Netlist::gate_count() const {
  int n = 0;
  for (const auto& g : gates_)
    if (g.kind != GateKind::Input && g.kind != GateKind::Const) ++n;
  return n;
}

int Netlist::levels() const {
  int m = 0;
  for (const auto& g : gates_) m = std::max(m, g.level);
  return m;
}

bool Netlist::lowered() const {
  for (const auto& g : gates_)
    if (g.kind == GateKind::And || g.kind == GateKind::Or || g.kind == GateKind::Xor) return false;
  return true;
}

std::vector<uint8_t> Netlist::eval_values(const std::vector<uint8_t>& input_values) const {
  if (input_values.size() != input_order_.size())
    throw MissingInput("expected " + std::to_string(input_order_.size()) + " input values");
  std::vector<uint8_t> v(gates_.size(), 0);
  size_t next_input = 0;
  for (size_t id = 0; id < gates_.size(); ++id) {
    const Gate& g = gates_[id];
    switch (g.kind) {
      case GateKind::Input: v[id] = input_values[next_input++] ? 1 : 0; break;
      case GateKind::Const: v[id] = g.a ? 1 : 0; break;
      case GateKind::Not: v[id] = v[static_cast<size_t>(g.a)] ^ 1; break;
      case GateKind::And:
        v[id] = v[static_cast<size_t>(g.a)] & v[static_cast<size_t>(g.b)];
        break;
      case GateKind::Or:
        v[id] = v[static_cast<size_t>(g.a)] | v[static_cast<size_t>(g.b)];
        break;
      case GateKind::Xor:
        v[id] = v[static_cast<size_t>(g.a)] ^ v[static_cast<size_t>(g.b)];
        break;
      case GateKind::Nand:
        v[id] = (v[static_cast<size_t>(g.a)] & v[static_cast<size_t>(g.b)]) ^ 1;
        break;
      case GateKind::Nor:
        v[id] = (v[static_cast<size_t>(g.a)] | v[static_cast<size_t>(g.b)]) ^ 1;
        break;
    }
  }
  return v;
}

std::map<std::string, bool> Netlist::eval(const std::map<std::string, bool>& assignment) const {
  std::vector<uint8_t> in(input_order_.size());
  size_t k = 0;
  for (int id : input_order_) {
    auto it = assignment.find(gate(id).name);
    if (it == assignment.end()) throw MissingInput("no value for input " + gate(id).name);
    in[k++] = it->second ? 1 : 0;
  }
  std::vector<uint8_t> v = eval_values(in);
  std::map<std::string, bool> out;
  for (const auto& [name, id] : outputs_) out[name] = v[static_cast<size_t>(id)] != 0;
  return out;
}

void Netlist::dump(std::ostream& os) const {
  for (size_t id = 0; id < gates_.size(); ++id) {
    const Gate& g = gates_[id];
    os << id << ' ' << gate_kind_name(g.kind);
    switch (g.kind) {
      case GateKind::Input: os << ' ' << g.name; break;
      case GateKind::Const: os << ' ' << g.a; break;
      case GateKind::Not: os << ' ' << g.a; break;
      default: os << ' ' << g.a << ' ' << g.b; break;
    }
    os << " # " << g.level << '\n';
  }
  for (const auto& [name, id] : outputs_) os << "OUTPUT " << name << ' ' << id << '\n';
}

std::string Netlist::dump_string() const {
  std::ostringstream ss;
  dump(ss);
  return ss.str();
}

Netlist Netlist::parse(std::istream& is) {
  Netlist nl;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty()) continue;
    std::istringstream ls(body);
    std::string first;
    ls >> first;
    auto fail = [&](const std::string& why) {
      throw IoFailure("netlist line " + std::to_string(lineno) + ": " + why);
    };
    if (first == "OUTPUT") {
      std::string name;
      int id;
      if (!(ls >> name >> id)) fail("malformed OUTPUT line");
      if (id < 0 || id >= nl.size()) fail("output id out of range");
      nl.outputs_[name] = id;
      continue;
    }
    int id = -1;
    try {
      id = std::stoi(first);
    } catch (...) {
      fail("expected gate id");
    }
    if (id != nl.size()) fail("ids must be dense and ascending");
    std::string kind_name;
    if (!(ls >> kind_name)) fail("missing gate kind");
    GateKind kind = kind_from_name(kind_name);
    Gate g{kind, -1, -1, 0, ""};
    if (kind == GateKind::Input) {
      if (!(ls >> g.name)) fail("INPUT needs a name");
    } else if (kind == GateKind::Const) {
      if (!(ls >> g.a) || (g.a != 0 && g.a != 1)) fail("CONST needs 0 or 1");
    } else if (kind == GateKind::Not) {
      if (!(ls >> g.a)) fail("NOT needs one fanin");
      if (g.a < 0 || g.a >= nl.size()) fail("fanin out of range");
      g.level = nl.gate(g.a).level + 1;
    } else {
      if (!(ls >> g.a >> g.b)) fail("gate needs two fanins");
      if (g.a < 0 || g.a >= nl.size() || g.b < 0 || g.b >= nl.size())
        fail("fanin out of range");
      g.level = 1 + std::max(nl.gate(g.a).level, nl.gate(g.b).level);
    }
    // rebuild verbatim: no folding or hashing, ids must survive a round trip
    nl.gates_.push_back(g);
    if (kind == GateKind::Input) {
      nl.inputs_.emplace(g.name, id);
      nl.input_order_.push_back(id);
    }
    if (kind == GateKind::Const && nl.const_id_[g.a] < 0) nl.const_id_[g.a] = id;
  }
  return nl;
}

int emit_expr(Netlist& nl, const Expr& e, const std::map<std::string, int>& env,
              std::map<Expr, int>& memo) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  int id = -1;
  switch (e->kind) {
    case ExprKind::Var: {
      auto v = env.find(e->name);
      if (v == env.end()) throw MissingInput("no gate bound to variable " + e->name);
      id = v->second;
      break;
    }
    case ExprKind::Const: id = nl.add_const(e->value); break;
    case ExprKind::Not: id = nl.add_not(emit_expr(nl, e->a, env, memo)); break;
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Xor:
    case ExprKind::Nand:
    case ExprKind::Nor: {
      int a = emit_expr(nl, e->a, env, memo);
      int b = emit_expr(nl, e->b, env, memo);
      GateKind k = GateKind::And;
      if (e->kind == ExprKind::Or) k = GateKind::Or;
      if (e->kind == ExprKind::Xor) k = GateKind::Xor;
      if (e->kind == ExprKind::Nand) k = GateKind::Nand;
      if (e->kind == ExprKind::Nor) k = GateKind::Nor;
      id = nl.add_gate(k, a, b);
      break;
    }
  }
  memo.emplace(e, id);
  return id;
}

}  // namespace memos
