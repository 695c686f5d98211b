// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/ast.hpp"

#include <cassert>

#include "arith.hpp"

namespace ddi {

bool is_relational(BinOp op) noexcept {
  switch (op) {
    case BinOp::Add:
    case BinOp::Sub:
    case BinOp::Mul:
    case BinOp::Div:
      return false;
    default:
      return true;
  }
}

std::string_view to_string(BinOp op) noexcept {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
  }
  return "?";
}

std::string_view to_string(InstrKind kind) noexcept {
  switch (kind) {
    case InstrKind::Declaration: return "declaration";
    case InstrKind::Assignment: return "assignment";
    case InstrKind::Arithmetic: return "arithmetic";
    case InstrKind::Conditional: return "conditional";
    case InstrKind::LoopInit: return "loop-init";
    case InstrKind::LoopCond: return "loop-cond";
    case InstrKind::LoopIncr: return "loop-incr";
    case InstrKind::Input: return "input";
    case InstrKind::Output: return "output";
    case InstrKind::ControlTransfer: return "control-transfer";
    case InstrKind::PointerAssign: return "pointer-assign";
  }
  return "?";
}

Expr Expr::literal(std::int64_t v) {
  Expr e;
  e.kind = Kind::Literal;
  e.value = v;
  return e;
}

Expr Expr::var(std::string n) {
  Expr e;
  e.kind = Kind::Var;
  e.name = std::move(n);
  return e;
}

Expr Expr::pointer_ref(std::string n) {
  Expr e;
  e.kind = Kind::PointerRef;
  e.name = std::move(n);
  return e;
}

Expr Expr::index(std::string n, std::vector<Expr> subscripts) {
  Expr e;
  e.kind = Kind::Index;
  e.name = std::move(n);
  e.operands = std::move(subscripts);
  return e;
}

Expr Expr::deref(std::string n) {
  Expr e;
  e.kind = Kind::Deref;
  e.name = std::move(n);
  return e;
}

Expr Expr::neg(Expr inner) {
  Expr e;
  e.kind = Kind::Neg;
  e.operands.push_back(std::move(inner));
  return e;
}

Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = Kind::Binary;
  e.op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

const Instruction& Program::instruction(int index) const {
  assert(index >= 1 && static_cast<std::size_t>(index) <= instructions.size());
  return instructions[static_cast<std::size_t>(index - 1)];
}

Instruction& Program::instruction(int index) {
  assert(index >= 1 && static_cast<std::size_t>(index) <= instructions.size());
  return instructions[static_cast<std::size_t>(index - 1)];
}

const VarInfo* Program::find_var(std::string_view name) const noexcept {
  for (const auto& v : variables) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::optional<std::int64_t> fold_constant(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return e.value;
    case Expr::Kind::Neg: {
      auto v = fold_constant(e.operands[0]);
      if (!v) return std::nullopt;
      auto r = detail::negate(*v);
      if (r.fault != detail::ArithFault::None) return std::nullopt;
      return r.value;
    }
    case Expr::Kind::Binary: {
      auto a = fold_constant(e.operands[0]);
      auto b = fold_constant(e.operands[1]);
      if (!a || !b) return std::nullopt;
      auto r = detail::apply(e.op, *a, *b);
      if (r.fault != detail::ArithFault::None) return std::nullopt;
      return r.value;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace ddi
