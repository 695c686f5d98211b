// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

// Syntax tree of the mini-language. A Program keeps two views of the same
// source: the statement tree (for printing and interpretation) and the flat,
// 1-based instruction list that every analysis is keyed on.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddi {

enum class BinOp { Add, Sub, Mul, Div, Lt, Le, Gt, Ge, Eq, Ne };

bool is_relational(BinOp op) noexcept;
std::string_view to_string(BinOp op) noexcept;

struct Expr {
  enum class Kind {
    Literal,     // integer constant
    Var,         // scalar variable
    PointerRef,  // pointer variable read by value (`print p`)
    Index,       // array element, one operand per dimension
    Deref,       // `*p`
    Neg,         // unary minus over a non-literal
    Binary,
  };

  Kind kind = Kind::Literal;
  std::int64_t value = 0;
  std::string name;
  BinOp op = BinOp::Add;
  std::vector<Expr> operands;

  static Expr literal(std::int64_t v);
  static Expr var(std::string n);
  static Expr pointer_ref(std::string n);
  static Expr index(std::string n, std::vector<Expr> subscripts);
  static Expr deref(std::string n);
  static Expr neg(Expr e);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);

  bool is_lvalue() const noexcept {
    return kind == Kind::Var || kind == Kind::Index || kind == Kind::Deref;
  }

  bool operator==(const Expr&) const = default;
};

enum class VarKind { Scalar, Array, Pointer };

struct DeclItem {
  std::string name;
  VarKind kind = VarKind::Scalar;
  int rank = 0;  // arrays only
  std::optional<std::int64_t> init;

  bool operator==(const DeclItem&) const = default;
};

enum class InstrKind {
  Declaration,
  Assignment,
  Arithmetic,
  Conditional,
  LoopInit,
  LoopCond,
  LoopIncr,
  Input,
  Output,
  ControlTransfer,
  PointerAssign,
};

std::string_view to_string(InstrKind kind) noexcept;

enum class Transfer { Break, Continue, Goto };

struct Instruction {
  int index = 0;
  InstrKind kind = InstrKind::Assignment;

  // Written lvalues: one for assignments and loop init/incr, one or more
  // for `read`.
  std::vector<Expr> targets;
  // Read expressions: right-hand side, condition, or `print` arguments.
  std::vector<Expr> operands;
  // Declaration only: every declared item, initialized or not.
  std::vector<DeclItem> decls;
  // PointerAssign only.
  std::string pointer;
  std::string pointee;
  // ControlTransfer only.
  Transfer transfer = Transfer::Break;
  std::string jump_label;

  // Enclosing loops, outermost first, identified by the index of their
  // loop-init instruction. Header instructions list the loops around their
  // own for statement, not the loop itself.
  std::vector<int> loops;
  // Set for the statement guarded by an `if`.
  bool guarded = false;

  bool is_loop_header() const noexcept {
    return kind == InstrKind::LoopInit || kind == InstrKind::LoopCond ||
           kind == InstrKind::LoopIncr;
  }

  bool operator==(const Instruction&) const = default;
};

struct Stmt {
  enum class Kind {
    Instr,  // any indexed simple statement
    Decl,   // declaration without initializers; carries no index
    If,     // `instr` is the condition, `body` holds the guarded statement
    For,
  };

  Kind kind = Kind::Instr;
  int instr = 0;
  std::vector<DeclItem> decls;
  int init = 0;
  int cond = 0;
  int incr = 0;
  std::vector<Stmt> body;
  std::string label;  // goto target, empty when unlabeled

  bool operator==(const Stmt&) const = default;
};

struct VarInfo {
  std::string name;
  VarKind kind = VarKind::Scalar;
  int rank = 0;
  bool loop_var = false;

  bool operator==(const VarInfo&) const = default;
};

struct Program {
  std::string origin = "<stdin>";
  bool has_function = false;
  std::string function_name;
  std::vector<DeclItem> params;
  std::vector<Stmt> body;
  std::vector<Instruction> instructions;  // instructions[i].index == i + 1
  std::vector<VarInfo> variables;         // declaration order

  const Instruction& instruction(int index) const;
  Instruction& instruction(int index);
  const VarInfo* find_var(std::string_view name) const noexcept;

  // Origin is provenance, not content.
  bool operator==(const Program& o) const {
    return has_function == o.has_function &&
           function_name == o.function_name && params == o.params &&
           body == o.body && instructions == o.instructions &&
           variables == o.variables;
  }
};

/// Folds an expression built only from literals; nullopt if it mentions
/// any storage or divides by zero.
std::optional<std::int64_t> fold_constant(const Expr& e);

}  // namespace ddi
