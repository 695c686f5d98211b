// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/transforms.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <utility>

#include "ddi/error.hpp"
#include "ddi/frontend.hpp"
#include "json.hpp"

namespace ddi {

std::string TransformReport::to_json() const {
  nlohmann::ordered_json j;
  j["removed_instructions"] = removed_instructions;
  j["removed_variables"] = removed_variables;
  j["removed_initializers"] = nlohmann::ordered_json::array();
  for (const auto& r : removed_initializers) {
    j["removed_initializers"].push_back(
        {{"instruction", r.instruction}, {"variable", r.variable}});
  }
  j["rewritten_reads"] = nlohmann::ordered_json::array();
  for (const auto& r : rewritten_reads) {
    j["rewritten_reads"].push_back({{"instruction", r.instruction},
                                    {"variable", r.variable},
                                    {"constant", r.constant}});
  }
  nlohmann::ordered_json ind;
  ind["basic"] = induction_basic;
  ind["refined"] = induction_refined;
  ind["derived"] = induction_derived;
  ind["flagged"] = flagged;
  j["induction"] = std::move(ind);
  return j.dump(2) + "\n";
}

namespace {

// A program under transformation plus the original index of each of its
// instructions.
struct Working {
  Program prog;
  std::vector<int> origin;
};

bool has_goto(const Program& p) {
  return std::any_of(p.instructions.begin(), p.instructions.end(),
                     [](const Instruction& i) {
                       return i.kind == InstrKind::ControlTransfer &&
                              i.transfer == Transfer::Goto;
                     });
}

void collect_indices(const std::vector<Stmt>& body, std::vector<int>& out) {
  for (const auto& s : body) {
    switch (s.kind) {
      case Stmt::Kind::Decl:
        break;
      case Stmt::Kind::Instr:
        out.push_back(s.instr);
        break;
      case Stmt::Kind::If:
        out.push_back(s.instr);
        collect_indices(s.body, out);
        break;
      case Stmt::Kind::For:
        out.push_back(s.init);
        out.push_back(s.cond);
        out.push_back(s.incr);
        collect_indices(s.body, out);
        break;
    }
  }
}

// Prints the edited tree and parses it back, carrying origins across the
// renumbering.
Working reparse(const Program& edited, const std::vector<int>& origin) {
  std::vector<int> surviving;
  collect_indices(edited.body, surviving);
  Working w;
  w.prog = parse_program({pretty_print(edited), edited.origin});
  if (w.prog.instructions.size() != surviving.size()) {
    throw Error(ErrorKind::Semantic,
                "internal: transformed program did not reparse to the "
                "expected instruction count");
  }
  for (int old : surviving) w.origin.push_back(origin[static_cast<std::size_t>(old - 1)]);
  return w;
}

std::string print_with_origins(const Working& w) {
  PrintOptions opts;
  opts.index_comments = true;
  opts.original_indices = w.origin;
  return pretty_print(w.prog, opts);
}

const Stmt* top_level_stmt(const Program& p, int index) {
  for (const auto& s : p.body) {
    if ((s.kind == Stmt::Kind::Instr || s.kind == Stmt::Kind::If) &&
        s.instr == index) {
      return &s;
    }
  }
  return nullptr;
}

bool is_top_level(const Program& p, const InstructionInstance& inst) {
  return !inst.label.header && inst.label.loop == 0 &&
         !p.instruction(inst.label.base).guarded;
}

// --- dead code -------------------------------------------------------------

struct WriteSite {
  std::int64_t seq;
  int index;
  std::string init;  // declared name when the write is an initializer
};

bool is_declared(const Program& p, const std::string& name) {
  for (const auto& d : p.params) {
    if (d.name == name) return true;
  }
  bool found = false;
  std::vector<const std::vector<Stmt>*> stack{&p.body};
  while (!stack.empty() && !found) {
    const auto* block = stack.back();
    stack.pop_back();
    for (const auto& s : *block) {
      if (s.kind == Stmt::Kind::Decl) {
        for (const auto& d : s.decls) found = found || d.name == name;
      }
      if (s.kind == Stmt::Kind::Instr &&
          p.instruction(s.instr).kind == InstrKind::Declaration) {
        for (const auto& d : p.instruction(s.instr).decls) {
          found = found || d.name == name;
        }
      }
      if (!s.body.empty()) stack.push_back(&s.body);
    }
  }
  return found;
}

bool mentions(const Expr& e, const std::string& name) {
  if (e.kind != Expr::Kind::Literal && e.name == name) return true;
  return std::any_of(e.operands.begin(), e.operands.end(),
                     [&](const Expr& o) { return mentions(o, name); });
}

// Whether any statement names `name`, executed or not.
bool mentioned(const Program& p, const std::string& name) {
  for (const auto& ins : p.instructions) {
    if (ins.kind == InstrKind::Declaration) continue;
    if (ins.pointer == name || ins.pointee == name) return true;
    for (const auto* list : {&ins.targets, &ins.operands}) {
      for (const auto& e : *list) {
        if (mentions(e, name)) return true;
      }
    }
  }
  return false;
}

// Drops `name` from every declaration. Returns false, leaving the program
// untouched, when that would empty a labeled declaration.
bool remove_variable(Program& p, const std::string& name) {
  auto drop = [&](std::vector<DeclItem>& items) {
    items.erase(std::remove_if(items.begin(), items.end(),
                               [&](const DeclItem& d) { return d.name == name; }),
                items.end());
  };
  std::vector<std::vector<Stmt>*> blocks{&p.body};
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (auto& s : *blocks[k]) {
      if (s.kind == Stmt::Kind::Decl && !s.label.empty()) {
        bool only = std::all_of(s.decls.begin(), s.decls.end(),
                                [&](const DeclItem& d) { return d.name == name; });
        if (only) return false;
      }
      if (!s.body.empty()) blocks.push_back(&s.body);
    }
  }
  drop(p.params);
  for (auto* block : blocks) {
    for (auto& s : *block) {
      if (s.kind == Stmt::Kind::Decl) drop(s.decls);
      if (s.kind == Stmt::Kind::Instr &&
          p.instruction(s.instr).kind == InstrKind::Declaration) {
        drop(p.instruction(s.instr).decls);
      }
    }
    block->erase(std::remove_if(block->begin(), block->end(),
                                [](const Stmt& s) {
                                  return s.kind == Stmt::Kind::Decl &&
                                         s.decls.empty();
                                }),
                 block->end());
  }
  return true;
}

void drop_initializer(Program& p, int index, const std::string& name) {
  Instruction& ins = p.instruction(index);
  for (auto& d : ins.decls) {
    if (d.name == name) d.init.reset();
  }
  const bool any = std::any_of(ins.decls.begin(), ins.decls.end(),
                               [](const DeclItem& d) { return d.init.has_value(); });
  if (any) return;
  for (auto& s : p.body) {
    if (s.kind == Stmt::Kind::Instr && s.instr == index) {
      s.kind = Stmt::Kind::Decl;
      s.decls = ins.decls;
      s.instr = 0;
    }
  }
}

bool dce_pass(Working& w, TransformReport& rep, std::size_t cap) {
  const Program& p = w.prog;
  const ExpandedProgram xp = expand_loops(p, cap);
  const DdiGraph g = build_graph(xp);

  std::set<std::string> dead_vars;
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    const MemLocation& loc = g.node(v);
    if (loc.is_sentinel() || loc.kind == MemLocation::Kind::ArrayElem) continue;
    if (g.in_edges(v).empty() && g.out_edges(v).empty() &&
        is_declared(p, loc.name) && !mentioned(p, loc.name)) {
      dead_vars.insert(loc.name);
    }
  }
  for (const auto& var : p.variables) {
    if (var.kind != VarKind::Array) continue;
    bool used = std::any_of(g.nodes().begin(), g.nodes().end(),
                            [&](const MemLocation& m) {
                              return m.kind == MemLocation::Kind::ArrayElem &&
                                     m.name == var.name;
                            });
    if (!used && !mentioned(p, var.name)) dead_vars.insert(var.name);
  }

  std::set<int> dead_instrs;
  std::set<std::pair<int, std::string>> dead_inits;
  if (!has_goto(p)) {
    std::map<MemLocation, std::vector<WriteSite>> removable;
    std::map<MemLocation, std::vector<std::int64_t>> definite;
    for (const auto& inst : xp.instances) {
      if (!is_top_level(p, inst)) continue;
      const Instruction& ins = p.instruction(inst.label.base);
      const Stmt* st = top_level_stmt(p, ins.index);
      for (const auto& pair : inst.access) {
        for (const auto& loc : pair.writes) {
          if (loc.is_sentinel()) continue;
          definite[loc].push_back(inst.label.seq);
          if (ins.kind == InstrKind::Declaration) {
            removable[loc].push_back({inst.label.seq, ins.index, loc.name});
          } else if ((ins.kind == InstrKind::Assignment ||
                      ins.kind == InstrKind::Arithmetic) &&
                     st != nullptr && st->label.empty()) {
            removable[loc].push_back({inst.label.seq, ins.index, ""});
          }
        }
      }
    }
    for (const auto& [loc, sites] : removable) {
      const std::size_t v = *g.find(loc);
      std::vector<std::int64_t> reads;
      for (std::size_t id : g.out_edges(v)) {
        const Edge& e = g.edges()[id];
        if (e.style == EdgeStyle::Solid) reads.push_back(e.label.seq);
      }
      std::sort(reads.begin(), reads.end());
      const auto& kills = definite[loc];
      for (const auto& site : sites) {
        auto next = std::upper_bound(kills.begin(), kills.end(), site.seq);
        const std::int64_t until = next == kills.end() ? INT64_MAX : *next;
        auto r = std::upper_bound(reads.begin(), reads.end(), site.seq);
        if (r != reads.end() && *r <= until) continue;
        if (site.init.empty()) {
          dead_instrs.insert(site.index);
        } else {
          dead_inits.emplace(site.index, site.init);
        }
      }
    }
  }

  if (dead_vars.empty() && dead_instrs.empty() && dead_inits.empty()) {
    return false;
  }

  Program edited = p;
  bool changed = false;
  for (const auto& [index, name] : dead_inits) {
    drop_initializer(edited, index, name);
    rep.removed_initializers.push_back({w.origin[static_cast<std::size_t>(index - 1)], name});
    changed = true;
  }
  if (!dead_instrs.empty()) {
    edited.body.erase(
        std::remove_if(edited.body.begin(), edited.body.end(),
                       [&](const Stmt& s) {
                         return s.kind == Stmt::Kind::Instr &&
                                dead_instrs.count(s.instr) > 0;
                       }),
        edited.body.end());
    for (int index : dead_instrs) {
      rep.removed_instructions.push_back(w.origin[static_cast<std::size_t>(index - 1)]);
    }
    changed = true;
  }
  for (const auto& name : dead_vars) {
    if (remove_variable(edited, name)) {
      rep.removed_variables.push_back(name);
      changed = true;
    }
  }
  if (!changed) return false;
  w = reparse(edited, w.origin);
  return true;
}

// --- constant propagation --------------------------------------------------

bool is_occurrence(const Expr& e) {
  return e.kind == Expr::Kind::Var || e.kind == Expr::Kind::Index ||
         e.kind == Expr::Kind::Deref;
}

void collect_occurrences(const Expr& e, std::vector<const Expr*>& out) {
  if (is_occurrence(e)) {
    out.push_back(&e);
    return;
  }
  if (e.kind == Expr::Kind::Neg || e.kind == Expr::Kind::Binary) {
    for (const auto& o : e.operands) collect_occurrences(o, out);
  }
}

void rewrite_occurrences(Expr& e, int& counter,
                         const std::map<int, std::int64_t>& repl) {
  if (is_occurrence(e)) {
    auto it = repl.find(counter++);
    if (it != repl.end()) e = Expr::literal(it->second);
    return;
  }
  if (e.kind == Expr::Kind::Neg || e.kind == Expr::Kind::Binary) {
    for (auto& o : e.operands) rewrite_occurrences(o, counter, repl);
  }
}

struct ConstSource {
  std::int64_t from;   // seq of the constant write
  std::int64_t until;  // seq of the next write, inclusive for reads
  std::int64_t value;
};

bool cp_pass(Working& w, TransformReport& rep, std::size_t cap) {
  const Program& p = w.prog;
  if (has_goto(p)) return false;
  const ExpandedProgram xp = expand_loops(p, cap);

  std::map<MemLocation, std::vector<std::int64_t>> writes;
  std::map<int, std::vector<const InstructionInstance*>> by_base;
  for (const auto& inst : xp.instances) {
    by_base[inst.label.base].push_back(&inst);
    for (const auto& pair : inst.access) {
      for (const auto& loc : pair.writes) {
        if (!loc.is_sentinel()) writes[loc].push_back(inst.label.seq);
      }
    }
  }

  auto is_loop_var = [&](const MemLocation& loc) {
    if (loc.kind != MemLocation::Kind::Scalar) return false;
    const VarInfo* v = p.find_var(loc.name);
    return v != nullptr && v->loop_var;
  };

  std::map<MemLocation, std::vector<ConstSource>> sources;
  auto add_source = [&](const MemLocation& loc, std::int64_t seq,
                        std::int64_t value) {
    if (is_loop_var(loc)) return;
    const auto& ws = writes[loc];
    auto next = std::upper_bound(ws.begin(), ws.end(), seq);
    sources[loc].push_back({seq, next == ws.end() ? INT64_MAX : *next, value});
  };
  for (const auto& inst : xp.instances) {
    if (!is_top_level(p, inst)) continue;
    const Instruction& ins = p.instruction(inst.label.base);
    if (ins.kind == InstrKind::Assignment &&
        ins.operands[0].kind == Expr::Kind::Literal) {
      add_source(*inst.access[0].writes.begin(), inst.label.seq,
                 ins.operands[0].value);
    } else if (ins.kind == InstrKind::Declaration) {
      for (const auto& d : ins.decls) {
        if (d.init) add_source(MemLocation::scalar(d.name), inst.label.seq, *d.init);
      }
    }
  }
  if (sources.empty()) return false;

  auto constant_at = [&](const MemLocation& loc,
                         std::int64_t seq) -> std::optional<std::int64_t> {
    auto it = sources.find(loc);
    if (it == sources.end()) return std::nullopt;
    for (const auto& s : it->second) {
      if (s.from < seq && seq <= s.until) return s.value;
    }
    return std::nullopt;
  };

  Program edited = p;
  bool changed = false;
  for (const auto& ins : p.instructions) {
    if (ins.is_loop_header() || ins.operands.empty() ||
        ins.kind == InstrKind::ControlTransfer) {
      continue;
    }
    auto found = by_base.find(ins.index);
    if (found == by_base.end()) continue;
    const auto& instances = found->second;

    std::vector<const Expr*> occs;
    for (const auto& o : ins.operands) collect_occurrences(o, occs);
    std::map<int, std::int64_t> repl;
    for (std::size_t n = 0; n < occs.size(); ++n) {
      const Expr& occ = *occs[n];
      if (occ.kind == Expr::Kind::Var) {
        const VarInfo* v = p.find_var(occ.name);
        if (v != nullptr && v->loop_var) continue;
      }
      std::optional<MemLocation> loc;
      std::optional<std::int64_t> value;
      bool ok = true;
      for (const auto* inst : instances) {
        MemLocation here = resolve_location(occ, ins.index, xp.points_to, inst->env);
        auto c = constant_at(here, inst->label.seq);
        if (!c || (loc && (*loc != here || *value != *c))) {
          ok = false;
          break;
        }
        loc = here;
        value = c;
      }
      if (!ok || !loc) continue;
      repl[static_cast<int>(n)] = *value;
      rep.rewritten_reads.push_back(
          {w.origin[static_cast<std::size_t>(ins.index - 1)], loc->str(), *value});
    }
    if (repl.empty()) continue;
    int counter = 0;
    for (auto& o : edited.instruction(ins.index).operands) {
      rewrite_occurrences(o, counter, repl);
    }
    changed = true;
  }
  if (!changed) return false;
  w = reparse(edited, w.origin);
  return true;
}

std::vector<int> identity_origin(const Program& p) {
  std::vector<int> o;
  for (const auto& ins : p.instructions) o.push_back(ins.index);
  return o;
}

}  // namespace

TransformResult eliminate_dead_code(const Program& prog, std::size_t cap) {
  Working w{prog, identity_origin(prog)};
  TransformReport rep;
  while (dce_pass(w, rep, cap)) {
  }
  std::sort(rep.removed_instructions.begin(), rep.removed_instructions.end());
  std::sort(rep.removed_variables.begin(), rep.removed_variables.end());
  rep.removed_variables.erase(
      std::unique(rep.removed_variables.begin(), rep.removed_variables.end()),
      rep.removed_variables.end());
  TransformResult r;
  r.source = print_with_origins(w);
  r.program = std::move(w.prog);
  r.origin = std::move(w.origin);
  r.report = std::move(rep);
  return r;
}

TransformResult propagate_constants(const Program& prog, bool iterate,
                                    std::size_t cap) {
  Working w{prog, identity_origin(prog)};
  TransformReport rep;
  while (cp_pass(w, rep, cap) && iterate) {
  }
  TransformResult r;
  r.source = print_with_origins(w);
  r.program = std::move(w.prog);
  r.origin = std::move(w.origin);
  r.report = std::move(rep);
  return r;
}

TransformReport detect_induction_variables(const DdiGraph& g) {
  TransformReport rep;
  // Sources of the edges into v, grouped by label.
  auto sources_by_label = [&](std::size_t v) {
    std::map<std::int64_t, std::pair<InstanceLabel, std::set<std::size_t>>> m;
    for (std::size_t id : g.in_edges(v)) {
      const Edge& e = g.edges()[id];
      if (e.style != EdgeStyle::Solid) continue;
      auto& slot = m[e.label.seq];
      slot.first = e.label;
      slot.second.insert(e.src);
    }
    return m;
  };

  std::set<std::size_t> basic;
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    if (g.node(v).is_sentinel()) continue;
    bool self = false;
    bool constant_step = true;
    for (const auto& [seq, entry] : sources_by_label(v)) {
      const auto& [label, srcs] = entry;
      if (label.loop == 0 || srcs.count(v) == 0) continue;
      self = true;
      for (std::size_t s : srcs) {
        if (s != v && s != DdiGraph::kPR) constant_step = false;
      }
    }
    if (!self) continue;
    basic.insert(v);
    rep.induction_basic.push_back(g.node(v).str());
    (constant_step ? rep.induction_refined : rep.flagged).push_back(g.node(v).str());
  }

  for (std::size_t w = 0; w < g.nodes().size(); ++w) {
    const MemLocation& loc = g.node(w);
    if (loc.kind != MemLocation::Kind::Scalar || basic.count(w)) continue;
    bool derived = false;
    for (const auto& [seq, entry] : sources_by_label(w)) {
      const auto& [label, srcs] = entry;
      if (label.instance == 0) continue;
      std::size_t from_basic = 0;
      bool linear = true;
      for (std::size_t s : srcs) {
        if (basic.count(s) && s != w) {
          ++from_basic;
        } else if (s != DdiGraph::kPR) {
          linear = false;
        }
      }
      if (linear && from_basic == 1) derived = true;
    }
    if (derived) rep.induction_derived.push_back(loc.str());
  }

  for (auto* v : {&rep.induction_basic, &rep.induction_refined,
                  &rep.induction_derived, &rep.flagged}) {
    std::sort(v->begin(), v->end());
  }
  return rep;
}

}  // namespace ddi
