#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "memos/errors.hpp"

namespace memos {

enum class ExprKind : uint8_t { Var, Const, Not, And, Or, Xor, Nand, Nor };

class BoolExpr;
using Expr = std::shared_ptr<const BoolExpr>;

// Immutable Boolean equation tree. Shared subtrees are fine; evaluation and
// lowering never mutate.
class BoolExpr {
 public:
  ExprKind kind;
  std::string name;     // Var
  bool value = false;   // Const
  Expr a, b;

  BoolExpr(ExprKind k, std::string n, bool v, Expr ea, Expr eb)
      : kind(k), name(std::move(n)), value(v), a(std::move(ea)), b(std::move(eb)) {}
};

Expr var(std::string name);
Expr constant(bool v);
Expr bnot(Expr e);
Expr band(Expr a, Expr b);
Expr bor(Expr a, Expr b);
Expr bxor(Expr a, Expr b);
Expr bnand(Expr a, Expr b);
Expr bnor(Expr a, Expr b);

bool eval(const Expr& e, const std::map<std::string, bool>& env);  // MissingInput
void collect_vars(const Expr& e, std::set<std::string>& out);
std::string to_string(const Expr& e);

// Double-inversion rewrite: the result uses only Var/Const/Not/Nand/Nor and is
// equivalent to the input on every assignment. Xor expands to the four-gate
// NAND form first.
Expr lower_to_nand_nor(const Expr& e);

bool is_nand_nor_form(const Expr& e);

// Structural equality (same shape, names, constants).
bool same_structure(const Expr& x, const Expr& y);

}  // namespace memos
