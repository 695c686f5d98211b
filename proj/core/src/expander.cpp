// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/expander.hpp"

#include <utility>

#include "arith.hpp"
#include "ddi/error.hpp"
#include "ddi/frontend.hpp"

namespace ddi {

std::string InstanceLabel::str() const {
  if (instance == 0) return std::to_string(base);
  return std::to_string(base) + "." + std::to_string(instance);
}

InstructionInstance resolve_subscripts(const Instruction& instr,
                                       InstructionInstance inst,
                                       const PointsToMap& pts) {
  inst.access = extract_access_pairs(instr, pts, inst.env);
  return inst;
}

namespace {

std::int64_t constant_or_throw(const Expr& e, const char* what) {
  auto v = fold_constant(e);
  if (!v) {
    throw Error(ErrorKind::SymbolicBound,
                std::string(what) + " '" + format_expr(e) +
                    "' is not a compile-time constant");
  }
  return *v;
}

class Expander {
 public:
  Expander(const Program& prog, std::size_t cap)
      : prog_(prog),
        counters_(prog.instructions.size() + 1, 0),
        header_done_(prog.instructions.size() + 1, false) {
    xp_.unroll_cap = cap;
    xp_.points_to = build_points_to(prog);
    xp_.variables = prog.variables;
  }

  ExpandedProgram run() {
    block(prog_.body);
    return std::move(xp_);
  }

 private:
  void block(const std::vector<Stmt>& stmts) {
    for (const auto& s : stmts) stmt(s);
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Decl:
        return;
      case Stmt::Kind::Instr:
        emit(s.instr, false, 0);
        return;
      case Stmt::Kind::If:
        emit(s.instr, false, 0);
        block(s.body);
        return;
      case Stmt::Kind::For:
        loop(s);
        return;
    }
  }

  void loop(const Stmt& s) {
    const Instruction& init = prog_.instruction(s.init);
    const Instruction& cond = prog_.instruction(s.cond);
    const Instruction& incr = prog_.instruction(s.incr);
    const std::string& var = init.targets[0].name;

    if (!header_done_[s.init]) {
      header_done_[s.init] = true;
      emit(s.init, true, s.init);
      emit(s.cond, true, s.init);
      emit(s.incr, true, s.init);
    }

    const std::int64_t start = constant_or_throw(init.operands[0], "loop start");
    const Expr& test = cond.operands[0];
    const std::int64_t bound = constant_or_throw(test.operands[1], "loop bound");
    const Expr& step_expr = incr.operands[0];
    const std::int64_t step = constant_or_throw(step_expr.operands[1], "loop step");

    std::int64_t trips = 0;
    std::int64_t v = start;
    while (detail::apply(test.op, v, bound).value != 0) {
      ++trips;
      if (++iterations_ > xp_.unroll_cap) cap_exceeded();
      env_[var] = v;
      path_.push_back({s.init, trips});
      block(s.body);
      path_.pop_back();
      auto next = detail::apply(step_expr.op, v, step);
      if (next.fault != detail::ArithFault::None) {
        throw Error(ErrorKind::Overflow,
                    "loop variable '" + var + "' overflows");
      }
      v = next.value;
    }
    env_.erase(var);
    record_loop(s.init, var, trips);
  }

  void record_loop(int id, const std::string& var, std::int64_t trips) {
    for (const auto& l : xp_.loops) {
      if (l.id == id) return;
    }
    const auto& loops = prog_.instruction(id).loops;
    LoopInfo info;
    info.id = id;
    info.var = var;
    info.parent = loops.empty() ? 0 : loops.back();
    info.trip_count = trips;
    auto it = xp_.loops.begin();
    while (it != xp_.loops.end() && it->id < id) ++it;
    xp_.loops.insert(it, std::move(info));
  }

  [[noreturn]] void cap_exceeded() const {
    throw Error(ErrorKind::UnrollCapExceeded,
                "expansion exceeds the unroll cap of " +
                    std::to_string(xp_.unroll_cap));
  }

  void emit(int index, bool header, int own_loop) {
    const Instruction& ins = prog_.instruction(index);
    if (xp_.instances.size() >= xp_.unroll_cap) cap_exceeded();
    InstructionInstance inst;
    inst.label.base = index;
    inst.label.seq = static_cast<std::int64_t>(xp_.instances.size()) + 1;
    inst.label.iterations = path_;
    inst.label.header = header;
    if (header) {
      inst.label.loop = own_loop;
    } else {
      inst.label.loop = ins.loops.empty() ? 0 : ins.loops.back();
      if (!ins.loops.empty()) inst.label.instance = ++counters_[index];
    }
    inst.access_class = classify_instruction(ins);
    inst.env = env_;
    inst = resolve_subscripts(ins, std::move(inst), xp_.points_to);
    check_loop_var_writes(ins, inst);
    xp_.instances.push_back(std::move(inst));
  }

  void check_loop_var_writes(const Instruction& ins,
                             const InstructionInstance& inst) const {
    for (const auto& pair : inst.access) {
      for (const auto& w : pair.writes) {
        if (w.kind == MemLocation::Kind::Scalar && env_.count(w.name)) {
          throw Error(ErrorKind::UnsupportedConstruct,
                      "instruction " + std::to_string(ins.index) +
                          " writes loop variable '" + w.name +
                          "' inside its loop");
        }
      }
    }
  }

  const Program& prog_;
  ExpandedProgram xp_;
  std::vector<int> counters_;
  std::vector<bool> header_done_;
  LoopEnv env_;
  std::vector<IterationPoint> path_;
  std::size_t iterations_ = 0;
};

}  // namespace

ExpandedProgram expand_loops(const Program& prog, std::size_t cap) {
  return Expander(prog, cap).run();
}

}  // namespace ddi
