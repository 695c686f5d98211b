// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "arith.hpp"
#include "ddi/error.hpp"
#include "ddi/graph.hpp"

namespace ddi {
namespace {

std::int64_t address_of(const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::int64_t>(h & 0x7fffffffffffffffull);
}

struct Signal {
  enum class Kind { Normal, Break, Continue, Goto };
  Kind kind = Kind::Normal;
  std::string label;
};

class Interpreter {
 public:
  Interpreter(const Program& prog, const std::vector<std::int64_t>& inputs,
              const InterpretOptions& opts)
      : prog_(prog), inputs_(inputs), opts_(opts),
        counters_(prog.instructions.size() + 1, 0) {
    for (const auto& v : prog.variables) {
      if (v.kind == VarKind::Scalar) store_[MemLocation::scalar(v.name)] = 0;
    }
  }

  ExecutionResult run() {
    Signal s = block(prog_.body, 0);
    if (s.kind == Signal::Kind::Goto) {
      throw Error(ErrorKind::Semantic, "goto target '" + s.label + "' not found");
    }
    for (const auto& [p, x] : pointers_) {
      store_[MemLocation::pointer(p)] = address_of(x);
    }
    result_.final_store = std::move(store_);
    return std::move(result_);
  }

 private:
  // --- statements ----------------------------------------------------------

  Signal block(const std::vector<Stmt>& stmts, std::size_t start) {
    for (std::size_t k = start; k < stmts.size(); ++k) {
      Signal s = stmt(stmts[k]);
      if (s.kind == Signal::Kind::Goto) {
        std::size_t target = stmts.size();
        for (std::size_t t = 0; t < stmts.size(); ++t) {
          if (stmts[t].label == s.label) target = t;
        }
        if (target == stmts.size()) return s;
        k = target - 1;  // resumes at the label
        continue;
      }
      if (s.kind != Signal::Kind::Normal) return s;
    }
    return {};
  }

  Signal stmt(const Stmt& s) {
    step();
    switch (s.kind) {
      case Stmt::Kind::Decl:
        return {};
      case Stmt::Kind::Instr:
        return instr(prog_.instruction(s.instr));
      case Stmt::Kind::If: {
        const Instruction& c = prog_.instruction(s.instr);
        begin(c);
        const bool taken = eval(c.operands[0]) != 0;
        event(MemLocation::hu(), AccessMode::Write);
        if (taken) return block(s.body, 0);
        return {};
      }
      case Stmt::Kind::For:
        return loop(s);
    }
    return {};
  }

  Signal loop(const Stmt& s) {
    const Instruction& init = prog_.instruction(s.init);
    const Instruction& cond = prog_.instruction(s.cond);
    const Instruction& incr = prog_.instruction(s.incr);
    assign(init);
    std::int64_t ordinal = 0;
    Signal out;
    while (true) {
      step();
      begin(cond);
      const bool go = eval(cond.operands[0]) != 0;
      event(MemLocation::hu(), AccessMode::Write);
      if (!go) break;
      path_.push_back({s.init, ++ordinal});
      Signal b = block(s.body, 0);
      path_.pop_back();
      if (b.kind == Signal::Kind::Break) break;
      if (b.kind == Signal::Kind::Goto) {
        out = b;
        break;
      }
      step();
      assign(incr);
    }
    return out;
  }

  Signal instr(const Instruction& ins) {
    switch (ins.kind) {
      case InstrKind::ControlTransfer: {
        begin(ins);
        Signal s;
        switch (ins.transfer) {
          case Transfer::Break: s.kind = Signal::Kind::Break; break;
          case Transfer::Continue: s.kind = Signal::Kind::Continue; break;
          case Transfer::Goto:
            s.kind = Signal::Kind::Goto;
            s.label = ins.jump_label;
            break;
        }
        return s;
      }
      case InstrKind::Declaration:
        begin(ins);
        for (const auto& d : ins.decls) {
          if (!d.init) continue;
          event(MemLocation::pr(), AccessMode::Read);
          write(MemLocation::scalar(d.name), *d.init);
        }
        return {};
      case InstrKind::Input:
        begin(ins);
        for (const auto& t : ins.targets) {
          if (next_input_ >= inputs_.size()) {
            throw Error(ErrorKind::InputExhausted,
                        "read at instruction " + std::to_string(ins.index) +
                            " has no input left");
          }
          event(MemLocation::hu(), AccessMode::Read);
          write(location(t), inputs_[next_input_++]);
        }
        return {};
      case InstrKind::Output:
        begin(ins);
        for (const auto& o : ins.operands) result_.printed.push_back(eval(o));
        event(MemLocation::hu(), AccessMode::Write);
        return {};
      case InstrKind::PointerAssign:
        begin(ins);
        pointers_[ins.pointer] = ins.pointee;
        return {};
      case InstrKind::Assignment:
      case InstrKind::Arithmetic:
      case InstrKind::LoopInit:
      case InstrKind::LoopIncr:
        assign(ins);
        return {};
      case InstrKind::Conditional:
      case InstrKind::LoopCond:
        break;
    }
    return {};
  }

  void assign(const Instruction& ins) {
    begin(ins);
    const std::int64_t v = eval(ins.operands[0]);
    write(location(ins.targets[0]), v);
  }

  // --- values ----------------------------------------------------------------

  void step() {
    if (++steps_ > opts_.step_limit) {
      throw Error(ErrorKind::StepLimit,
                  "execution exceeds " + std::to_string(opts_.step_limit) +
                      " steps");
    }
  }

  std::int64_t arith(BinOp op, std::int64_t a, std::int64_t b) {
    auto r = detail::apply(op, a, b);
    if (r.fault == detail::ArithFault::DivisionByZero) {
      throw Error(ErrorKind::DivisionByZero,
                  "division by zero at instruction " + std::to_string(current_));
    }
    if (r.fault == detail::ArithFault::Overflow) {
      throw Error(ErrorKind::Overflow,
                  "integer overflow at instruction " + std::to_string(current_));
    }
    return r.value;
  }

  std::string pointee(const std::string& p) {
    auto it = pointers_.find(p);
    if (it == pointers_.end()) {
      throw Error(ErrorKind::UnboundPointer,
                  "'*" + p + "' at instruction " + std::to_string(current_) +
                      " before any assignment to " + p);
    }
    return it->second;
  }

  MemLocation location(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Var:
        return MemLocation::scalar(e.name);
      case Expr::Kind::Deref:
        return MemLocation::scalar(pointee(e.name));
      case Expr::Kind::Index: {
        std::vector<std::int64_t> subs;
        const bool saved = recording_;
        recording_ = false;  // subscripts are not data reads
        for (const auto& s : e.operands) subs.push_back(eval(s));
        recording_ = saved;
        return MemLocation::element(e.name, std::move(subs));
      }
      default:
        throw Error(ErrorKind::Semantic, "not an lvalue");
    }
  }

  std::int64_t eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal:
        event(MemLocation::pr(), AccessMode::Read);
        return e.value;
      case Expr::Kind::PointerRef: {
        event(MemLocation::pointer(e.name), AccessMode::Read);
        auto it = pointers_.find(e.name);
        return it == pointers_.end() ? 0 : address_of(it->second);
      }
      case Expr::Kind::Neg: {
        auto r = detail::negate(eval(e.operands[0]));
        if (r.fault != detail::ArithFault::None) {
          throw Error(ErrorKind::Overflow,
                      "integer overflow at instruction " + std::to_string(current_));
        }
        return r.value;
      }
      case Expr::Kind::Binary: {
        const std::int64_t a = eval(e.operands[0]);
        const std::int64_t b = eval(e.operands[1]);
        return arith(e.op, a, b);
      }
      default: {
        MemLocation loc = location(e);
        event(loc, AccessMode::Read);
        auto it = store_.find(loc);
        return it == store_.end() ? 0 : it->second;
      }
    }
  }

  void write(const MemLocation& loc, std::int64_t v) {
    event(loc, AccessMode::Write);
    store_[loc] = v;
  }

  // --- trace -----------------------------------------------------------------

  void begin(const Instruction& ins) {
    current_ = ins.index;
    ++seq_;
    const bool counted = !ins.loops.empty() && !ins.is_loop_header();
    label_ = std::to_string(ins.index);
    if (counted) label_ += "." + std::to_string(++counters_[ins.index]);
  }

  void event(const MemLocation& loc, AccessMode mode) {
    if (!opts_.trace || !recording_) return;
    AccessEvent ev;
    ev.seq = seq_;
    ev.base = current_;
    ev.label = label_;
    ev.iterations = path_;
    ev.location = loc;
    ev.mode = mode;
    result_.trace.push_back(std::move(ev));
  }

  const Program& prog_;
  const std::vector<std::int64_t>& inputs_;
  const InterpretOptions& opts_;
  ExecutionResult result_;
  std::map<MemLocation, std::int64_t> store_;
  std::map<std::string, std::string> pointers_;
  std::size_t next_input_ = 0;
  std::size_t steps_ = 0;
  std::vector<int> counters_;
  std::vector<IterationPoint> path_;
  int current_ = 0;
  std::int64_t seq_ = 0;
  std::string label_;
  bool recording_ = true;
};

}  // namespace

ExecutionResult interpret(const Program& prog,
                          const std::vector<std::int64_t>& inputs,
                          const InterpretOptions& opts) {
  return Interpreter(prog, inputs, opts).run();
}

std::vector<Dependence> brute_force_dependences(const ExpandedProgram& xp) {
  struct Access {
    const InstanceLabel* label;
    AccessMode mode;
  };
  std::map<MemLocation, std::vector<Access>> by_location;
  for (const auto& inst : xp.instances) {
    for (const auto& pair : inst.access) {
      for (const auto& r : pair.reads) {
        if (!r.is_sentinel()) by_location[r].push_back({&inst.label, AccessMode::Read});
      }
      for (const auto& w : pair.writes) {
        if (!w.is_sentinel()) by_location[w].push_back({&inst.label, AccessMode::Write});
      }
    }
  }
  std::vector<Dependence> out;
  std::set<std::tuple<std::int64_t, std::int64_t, DepKind>> seen;
  for (const auto& [loc, accesses] : by_location) {
    seen.clear();
    for (const auto& a : accesses) {
      for (const auto& b : accesses) {
        if (a.label->seq >= b.label->seq) continue;
        DepKind kind;
        if (a.mode == AccessMode::Write) {
          kind = b.mode == AccessMode::Read ? DepKind::Flow : DepKind::Output;
        } else {
          kind = b.mode == AccessMode::Write ? DepKind::Anti : DepKind::Input;
        }
        if (!seen.emplace(a.label->seq, b.label->seq, kind).second) continue;
        Dependence d;
        d.kind = kind;
        d.earlier = *a.label;
        d.later = *b.label;
        d.location = loc;
        out.push_back(classify_carried(std::move(d)));
      }
    }
  }
  std::sort(out.begin(), out.end(), dependence_less);
  return out;
}

std::string Verdict::diff() const {
  std::string s;
  for (const auto& d : analyzer_only) s += "+ " + format_dependence(d) + "\n";
  for (const auto& d : oracle_only) s += "- " + format_dependence(d) + "\n";
  return s;
}

Verdict verify_equivalence(const Program& prog, std::size_t cap,
                           const DependenceFinder& finder) {
  const ExpandedProgram xp = expand_loops(prog, cap);
  auto analyzer = finder(build_graph(xp));
  auto oracle = brute_force_dependences(xp);
  std::sort(analyzer.begin(), analyzer.end(), dependence_less);

  Verdict v;
  auto contains = [](const std::vector<Dependence>& set, const Dependence& d) {
    auto it = std::lower_bound(set.begin(), set.end(), d, dependence_less);
    return it != set.end() && it->same_as(d);
  };
  for (const auto& d : analyzer) {
    if (!contains(oracle, d)) v.analyzer_only.push_back(d);
  }
  for (const auto& d : oracle) {
    if (!contains(analyzer, d)) v.oracle_only.push_back(d);
  }
  // Duplicates in the analyzer output are a mismatch too.
  for (std::size_t k = 1; k < analyzer.size(); ++k) {
    if (analyzer[k].same_as(analyzer[k - 1])) v.analyzer_only.push_back(analyzer[k]);
  }
  v.pass = v.analyzer_only.empty() && v.oracle_only.empty();
  return v;
}

}  // namespace ddi
