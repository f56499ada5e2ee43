#include "memos/boolexpr.hpp"

namespace memos {

namespace {

Expr make(ExprKind k, std::string n, bool v, Expr a, Expr b) {
  return std::make_shared<const BoolExpr>(k, std::move(n), v, std::move(a), std::move(b));
}

}  // namespace

Expr var(std::string name) { return make(ExprKind::Var, std::move(name), false, nullptr, nullptr); }
Expr constant(bool v) { return make(ExprKind::Const, "", v, nullptr, nullptr); }
Expr bnot(Expr e) { return make(ExprKind::Not, "", false, std::move(e), nullptr); }
Expr band(Expr a, Expr b) { return make(ExprKind::And, "", false, std::move(a), std::move(b)); }
Expr bor(Expr a, Expr b) { return make(ExprKind::Or, "", false, std::move(a), std::move(b)); }
Expr bxor(Expr a, Expr b) { return make(ExprKind::Xor, "", false, std::move(a), std::move(b)); }
Expr bnand(Expr a, Expr b) { return make(ExprKind::Nand, "", false, std::move(a), std::move(b)); }
Expr bnor(Expr a, Expr b) { return make(ExprKind::Nor, "", false, std::move(a), std::move(b)); }

bool eval(const Expr& e, const std::map<std::string, bool>& env) {
  switch (e->kind) {
    case ExprKind::Var: {
      auto it = env.find(e->name);
      if (it == env.end()) throw MissingInput("unbound variable " + e->name);
      return it->second;
    }
    case ExprKind::Const: return e->value;
    case ExprKind::Not: return !eval(e->a, env);
    case ExprKind::And: return eval(e->a, env) && eval(e->b, env);
    case ExprKind::Or: return eval(e->a, env) || eval(e->b, env);
    case ExprKind::Xor: return eval(e->a, env) != eval(e->b, env);
    case ExprKind::Nand: return !(eval(e->a, env) && eval(e->b, env));
    case ExprKind::Nor: return !(eval(e->a, env) || eval(e->b, env));
  }
  return false;
}

void collect_vars(const Expr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Var) out.insert(e->name);
  collect_vars(e->a, out);
  collect_vars(e->b, out);
}

std::string to_string(const Expr& e) {
  switch (e->kind) {
    case ExprKind::Var: return e->name;
    case ExprKind::Const: return e->value ? "1" : "0";
    case ExprKind::Not: return "!" + to_string(e->a);
    case ExprKind::And: return "(" + to_string(e->a) + " & " + to_string(e->b) + ")";
    case ExprKind::Or: return "(" + to_string(e->a) + " | " + to_string(e->b) + ")";
    case ExprKind::Xor: return "(" + to_string(e->a) + " ^ " + to_string(e->b) + ")";
    case ExprKind::Nand: return "NAND(" + to_string(e->a) + ", " + to_string(e->b) + ")";
    case ExprKind::Nor: return "NOR(" + to_string(e->a) + ", " + to_string(e->b) + ")";
  }
  return "?";
}

namespace {

Expr xor_nand_form(Expr a, Expr b) {
  // a^b = NAND(NAND(a, NAND(a,b)), NAND(b, NAND(a,b))); the shared inner gate
  // is the same node so netlist hashing keeps this at four gates
  Expr m = bnand(a, b);
  return bnand(bnand(a, m), bnand(b, m));
}

// negated=true lowers !e; pushing the negation down is what turns every
// And/Or into a single Nand/Nor instead of a gate-plus-inverter pair
Expr lower(const Expr& e, bool negated) {
  switch (e->kind) {
    case ExprKind::Var: return negated ? bnot(e) : e;
    case ExprKind::Const: return constant(e->value != negated);
    case ExprKind::Not: return lower(e->a, !negated);
    case ExprKind::And: {
      Expr body = bnand(lower(e->a, false), lower(e->b, false));
      return negated ? body : bnot(body);
    }
    case ExprKind::Or:
      if (negated) return bnor(lower(e->a, false), lower(e->b, false));
      // a|b = !( !a & !b )
      return bnand(lower(e->a, true), lower(e->b, true));
    case ExprKind::Nand: {
      Expr body = bnand(lower(e->a, false), lower(e->b, false));
      return negated ? bnot(body) : body;
    }
    case ExprKind::Nor: {
      if (!negated) return bnor(lower(e->a, false), lower(e->b, false));
      return bnand(lower(e->a, true), lower(e->b, true));
    }
    case ExprKind::Xor: {
      Expr body = xor_nand_form(lower(e->a, false), lower(e->b, false));
      return negated ? bnot(body) : body;
    }
  }
  return e;
}

}  // namespace

Expr lower_to_nand_nor(const Expr& e) { return lower(e, false); }

bool is_nand_nor_form(const Expr& e) {
  if (!e) return true;
  switch (e->kind) {
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Xor: return false;
    default: return is_nand_nor_form(e->a) && is_nand_nor_form(e->b);
  }
}

bool same_structure(const Expr& x, const Expr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind || x->name != y->name || x->value != y->value) return false;
  return same_structure(x->a, y->a) && same_structure(x->b, y->b);
}

}  // namespace memos
