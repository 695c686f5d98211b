// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>

#include "ddi/frontend.hpp"

namespace ddi {
namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary:
      if (is_relational(e.op)) return 0;
      return (e.op == BinOp::Add || e.op == BinOp::Sub) ? 1 : 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Literal:
      return e.value < 0 ? 3 : 4;
    default:
      return 4;
  }
}

void write_expr(std::ostream& os, const Expr& e);

void write_operand(std::ostream& os, const Expr& e, bool paren) {
  if (paren) os << '(';
  write_expr(os, e);
  if (paren) os << ')';
}

void write_expr(std::ostream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      os << e.value;
      return;
    case Expr::Kind::Var:
    case Expr::Kind::PointerRef:
      os << e.name;
      return;
    case Expr::Kind::Deref:
      os << '*' << e.name;
      return;
    case Expr::Kind::Index:
      os << e.name;
      for (const auto& s : e.operands) {
        os << '[';
        write_expr(os, s);
        os << ']';
      }
      return;
    case Expr::Kind::Neg:
      os << '-';
      write_operand(os, e.operands[0], precedence(e.operands[0]) < 4);
      return;
    case Expr::Kind::Binary: {
      const int p = precedence(e);
      const Expr& lhs = e.operands[0];
      const Expr& rhs = e.operands[1];
      write_operand(os, lhs, precedence(lhs) < p);
      os << ' ' << to_string(e.op) << ' ';
      // Left-associative: an equal-precedence right operand needs parens.
      write_operand(os, rhs, precedence(rhs) <= p && precedence(rhs) < 3);
      return;
    }
  }
}

void write_decl_items(std::ostream& os, const std::vector<DeclItem>& items) {
  bool first = true;
  for (const auto& d : items) {
    if (!first) os << ", ";
    first = false;
    if (d.kind == VarKind::Pointer) os << '*';
    os << d.name;
    for (int k = 0; k < d.rank; ++k) os << "[]";
    if (d.init) os << " = " << *d.init;
  }
}

void write_list(std::ostream& os, const std::vector<Expr>& xs) {
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ", ";
    write_expr(os, xs[k]);
  }
}

void write_simple(std::ostream& os, const Instruction& ins) {
  switch (ins.kind) {
    case InstrKind::Declaration:
      os << "int ";
      write_decl_items(os, ins.decls);
      os << ';';
      return;
    case InstrKind::Assignment:
    case InstrKind::Arithmetic:
    case InstrKind::LoopInit:
    case InstrKind::LoopIncr:
      write_expr(os, ins.targets[0]);
      os << " = ";
      write_expr(os, ins.operands[0]);
      os << ';';
      return;
    case InstrKind::Conditional:
      os << "if (";
      write_expr(os, ins.operands[0]);
      os << ')';
      return;
    case InstrKind::LoopCond:
      write_expr(os, ins.operands[0]);
      return;
    case InstrKind::Input:
      os << "read ";
      write_list(os, ins.targets);
      os << ';';
      return;
    case InstrKind::Output:
      os << "print ";
      write_list(os, ins.operands);
      os << ';';
      return;
    case InstrKind::ControlTransfer:
      switch (ins.transfer) {
        case Transfer::Break:
          os << "break;";
          return;
        case Transfer::Continue:
          os << "continue;";
          return;
        case Transfer::Goto:
          os << "goto " << ins.jump_label << ';';
          return;
      }
      return;
    case InstrKind::PointerAssign:
      os << ins.pointer << " = &" << ins.pointee << ';';
      return;
  }
}

void write_increment(std::ostream& os, const Instruction& ins) {
  const Expr& step = ins.operands[0];
  const Expr& v = ins.targets[0];
  const Expr& amount = step.operands[1];
  if (amount == Expr::literal(1)) {
    os << v.name << (step.op == BinOp::Add ? "++" : "--");
    return;
  }
  os << v.name << (step.op == BinOp::Add ? " += " : " -= ");
  write_expr(os, amount);
}

class Printer {
 public:
  Printer(const Program& p, const PrintOptions& o) : prog_(p), opts_(o) {}

  std::string run() {
    int depth = 0;
    if (prog_.has_function) {
      os_ << "void " << prog_.function_name << '(';
      for (std::size_t k = 0; k < prog_.params.size(); ++k) {
        if (k) os_ << ", ";
        os_ << "int ";
        write_decl_items(os_, {prog_.params[k]});
      }
      os_ << ")\n{\n";
      depth = 1;
    }
    for (const auto& s : prog_.body) stmt(s, depth);
    if (prog_.has_function) os_ << "}\n";
    return os_.str();
  }

 private:
  void indent(int depth) {
    for (int k = 0; k < depth; ++k) os_ << "  ";
  }

  std::string tag(int index) const {
    if (!opts_.index_comments) return {};
    int shown = index;
    if (index - 1 < static_cast<int>(opts_.original_indices.size())) {
      shown = opts_.original_indices[index - 1];
    }
    return "#" + std::to_string(shown);
  }

  void comment(std::initializer_list<int> indices) {
    if (!opts_.index_comments) return;
    os_ << "  //";
    for (int i : indices) os_ << ' ' << tag(i);
  }

  void stmt(const Stmt& s, int depth) {
    indent(depth);
    if (!s.label.empty()) os_ << s.label << ": ";
    switch (s.kind) {
      case Stmt::Kind::Decl:
        os_ << "int ";
        write_decl_items(os_, s.decls);
        os_ << ";\n";
        return;
      case Stmt::Kind::Instr:
        write_simple(os_, prog_.instruction(s.instr));
        comment({s.instr});
        os_ << '\n';
        return;
      case Stmt::Kind::If:
        write_simple(os_, prog_.instruction(s.instr));
        comment({s.instr});
        os_ << '\n';
        stmt(s.body.front(), depth + 1);
        return;
      case Stmt::Kind::For: {
        const auto& init = prog_.instruction(s.init);
        os_ << "for (";
        write_expr(os_, init.targets[0]);
        os_ << " = ";
        write_expr(os_, init.operands[0]);
        os_ << "; ";
        write_expr(os_, prog_.instruction(s.cond).operands[0]);
        os_ << "; ";
        write_increment(os_, prog_.instruction(s.incr));
        os_ << ") {";
        comment({s.init, s.cond, s.incr});
        os_ << '\n';
        for (const auto& b : s.body) stmt(b, depth + 1);
        indent(depth);
        os_ << "}\n";
        return;
      }
    }
  }

  const Program& prog_;
  const PrintOptions& opts_;
  std::ostringstream os_;
};

}  // namespace

std::string format_expr(const Expr& e) {
  std::ostringstream os;
  write_expr(os, e);
  return os.str();
}

std::string format_instruction(const Instruction& instr) {
  std::ostringstream os;
  write_simple(os, instr);
  return os.str();
}

std::string pretty_print(const Program& program, const PrintOptions& opts) {
  return Printer(program, opts).run();
}

}  // namespace ddi
