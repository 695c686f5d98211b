// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/classifier.hpp"

#include <utility>

#include "arith.hpp"
#include "ddi/error.hpp"
#include "ddi/frontend.hpp"

namespace ddi {

std::string_view to_string(AccessClass c) noexcept {
  switch (c) {
    case AccessClass::NMAI: return "NMAI";
    case AccessClass::MAR: return "MAR";
    case AccessClass::MAW: return "MAW";
    case AccessClass::MARW: return "MARW";
  }
  return "?";
}

MemLocation MemLocation::scalar(std::string n) {
  MemLocation m;
  m.name = std::move(n);
  return m;
}

MemLocation MemLocation::element(std::string n,
                                 std::vector<std::int64_t> subs) {
  MemLocation m;
  m.kind = Kind::ArrayElem;
  m.name = std::move(n);
  m.subscripts = std::move(subs);
  return m;
}

MemLocation MemLocation::pointer(std::string n) {
  MemLocation m;
  m.kind = Kind::PointerVar;
  m.name = std::move(n);
  return m;
}

MemLocation MemLocation::pr() {
  MemLocation m;
  m.kind = Kind::PR;
  m.name = "PR";
  return m;
}

MemLocation MemLocation::hu() {
  MemLocation m;
  m.kind = Kind::HU;
  m.name = "HU";
  return m;
}

std::string MemLocation::str() const {
  std::string s = name;
  for (auto v : subscripts) s += "[" + std::to_string(v) + "]";
  return s;
}

void PointsToMap::bind(std::string pointer, std::string pointee,
                       int position) {
  bindings_.push_back({std::move(pointer), std::move(pointee), position});
}

std::optional<std::string> PointsToMap::lookup(std::string_view pointer,
                                               int position) const {
  const Binding* best = nullptr;
  for (const auto& b : bindings_) {
    if (b.pointer == pointer && b.position < position &&
        (best == nullptr || b.position > best->position)) {
      best = &b;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->pointee;
}

namespace {

bool reads_storage(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return false;
    case Expr::Kind::Neg:
    case Expr::Kind::Binary:
      for (const auto& o : e.operands) {
        if (reads_storage(o)) return true;
      }
      return false;
    default:
      return true;
  }
}

struct Affine {
  std::int64_t value;
  bool has_var;
};

[[noreturn]] void non_affine(const Expr& e, const std::string& why) {
  throw Error(ErrorKind::NonAffineSubscript,
              "subscript '" + format_expr(e) + "' " + why);
}

std::int64_t checked(const Expr& e, detail::ArithResult r) {
  if (r.fault == detail::ArithFault::DivisionByZero) {
    throw Error(ErrorKind::DivisionByZero,
                "division by zero in subscript '" + format_expr(e) + "'");
  }
  if (r.fault == detail::ArithFault::Overflow) {
    throw Error(ErrorKind::Overflow,
                "overflow in subscript '" + format_expr(e) + "'");
  }
  return r.value;
}

Affine affine(const Expr& e, const LoopEnv& env) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return {e.value, false};
    case Expr::Kind::Var: {
      auto it = env.find(e.name);
      if (it == env.end()) non_affine(e, "uses non-loop variable " + e.name);
      return {it->second, true};
    }
    case Expr::Kind::Neg: {
      Affine a = affine(e.operands[0], env);
      return {checked(e, detail::negate(a.value)), a.has_var};
    }
    case Expr::Kind::Binary: {
      Affine a = affine(e.operands[0], env);
      Affine b = affine(e.operands[1], env);
      if (e.op == BinOp::Mul && a.has_var && b.has_var) {
        non_affine(e, "multiplies loop variables");
      }
      if (e.op == BinOp::Div && (a.has_var || b.has_var)) {
        non_affine(e, "divides a loop variable");
      }
      if (is_relational(e.op)) non_affine(e, "is a comparison");
      return {checked(e, detail::apply(e.op, a.value, b.value)),
              a.has_var || b.has_var};
    }
    default:
      non_affine(e, "reads memory");
  }
}

class Extractor {
 public:
  Extractor(const Instruction& ins, const PointsToMap& pts, const LoopEnv& env)
      : ins_(ins), pts_(pts), env_(env) {}

  MemLocation lvalue(const Expr& e) const {
    return resolve_location(e, ins_.index, pts_, env_);
  }

  void reads(const Expr& e, std::set<MemLocation>& out) const {
    switch (e.kind) {
      case Expr::Kind::Literal:
        out.insert(MemLocation::pr());
        return;
      case Expr::Kind::Neg:
      case Expr::Kind::Binary:
        for (const auto& o : e.operands) reads(o, out);
        return;
      default:
        out.insert(lvalue(e));
    }
  }

  std::vector<AccessPair> run() const {
    std::vector<AccessPair> out;
    switch (ins_.kind) {
      case InstrKind::ControlTransfer:
      case InstrKind::PointerAssign:
        return out;
      case InstrKind::Declaration:
        for (const auto& d : ins_.decls) {
          if (!d.init) continue;
          AccessPair p;
          p.reads.insert(MemLocation::pr());
          p.writes.insert(MemLocation::scalar(d.name));
          out.push_back(std::move(p));
        }
        return out;
      case InstrKind::Input:
        for (const auto& t : ins_.targets) {
          AccessPair p;
          p.reads.insert(MemLocation::hu());
          p.writes.insert(lvalue(t));
          out.push_back(std::move(p));
        }
        return out;
      case InstrKind::Conditional:
      case InstrKind::LoopCond:
      case InstrKind::Output: {
        AccessPair p;
        for (const auto& o : ins_.operands) reads(o, p.reads);
        p.writes.insert(MemLocation::hu());
        out.push_back(std::move(p));
        return out;
      }
      case InstrKind::Assignment:
      case InstrKind::Arithmetic:
      case InstrKind::LoopInit:
      case InstrKind::LoopIncr: {
        AccessPair p;
        reads(ins_.operands[0], p.reads);
        p.writes.insert(lvalue(ins_.targets[0]));
        out.push_back(std::move(p));
        return out;
      }
    }
    return out;
  }

 private:
  const Instruction& ins_;
  const PointsToMap& pts_;
  const LoopEnv& env_;
};

}  // namespace

MemLocation resolve_location(const Expr& e, int position,
                             const PointsToMap& pts, const LoopEnv& env) {
  switch (e.kind) {
    case Expr::Kind::Var:
      return MemLocation::scalar(e.name);
    case Expr::Kind::PointerRef:
      return MemLocation::pointer(e.name);
    case Expr::Kind::Index: {
      std::vector<std::int64_t> subs;
      for (const auto& s : e.operands) subs.push_back(evaluate_subscript(s, env));
      return MemLocation::element(e.name, std::move(subs));
    }
    case Expr::Kind::Deref: {
      auto target = pts.lookup(e.name, position);
      if (!target) {
        throw Error(ErrorKind::UnboundPointer,
                    "'*" + e.name + "' at instruction " +
                        std::to_string(position) +
                        " before any assignment to " + e.name);
      }
      return MemLocation::scalar(*target);
    }
    default:
      throw Error(ErrorKind::Semantic, "not an lvalue: " + format_expr(e));
  }
}

std::int64_t evaluate_subscript(const Expr& e, const LoopEnv& env) {
  return affine(e, env).value;
}

AccessClass classify_instruction(const Instruction& instr) {
  switch (instr.kind) {
    case InstrKind::ControlTransfer:
      return AccessClass::NMAI;
    case InstrKind::Conditional:
    case InstrKind::LoopCond:
    case InstrKind::Output:
      return AccessClass::MAR;
    case InstrKind::Input:
    case InstrKind::Declaration:
      return AccessClass::MAW;
    case InstrKind::PointerAssign:
      return AccessClass::MARW;
    case InstrKind::Assignment:
    case InstrKind::Arithmetic:
    case InstrKind::LoopInit:
    case InstrKind::LoopIncr:
      return reads_storage(instr.operands[0]) ? AccessClass::MARW
                                               : AccessClass::MAW;
  }
  return AccessClass::MARW;
}

std::vector<AccessPair> extract_access_pairs(const Instruction& instr,
                                             const PointsToMap& pts,
                                             const LoopEnv& env) {
  return Extractor(instr, pts, env).run();
}

PointsToMap record_pointer_assign(const Instruction& instr, PointsToMap pts) {
  if (instr.kind == InstrKind::PointerAssign) {
    pts.bind(instr.pointer, instr.pointee, instr.index);
  }
  return pts;
}

PointsToMap build_points_to(const Program& prog) {
  PointsToMap pts;
  for (const auto& ins : prog.instructions) {
    pts = record_pointer_assign(ins, std::move(pts));
  }
  return pts;
}

}  // namespace ddi
