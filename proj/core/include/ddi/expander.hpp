// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddi/ast.hpp"
#include "ddi/classifier.hpp"

namespace ddi {

inline constexpr std::size_t kDefaultUnrollCap = 10'000;

struct IterationPoint {
  int loop = 0;              // loop id (index of its loop-init instruction)
  std::int64_t ordinal = 0;  // 1-based iteration number

  bool operator==(const IterationPoint&) const = default;
};

/// `s` or `s.k`. Labels order and compare by execution sequence number.
struct InstanceLabel {
  int base = 0;
  int instance = 0;  // 0 for a bare label
  std::int64_t seq = 0;
  // Iteration of each enclosing loop, outermost first.
  std::vector<IterationPoint> iterations;
  // Innermost loop the instruction belongs to, counting a header's own
  // loop; 0 outside loops.
  int loop = 0;
  bool header = false;

  std::string str() const;

  bool operator==(const InstanceLabel& o) const noexcept { return seq == o.seq; }
  std::strong_ordering operator<=>(const InstanceLabel& o) const noexcept {
    return seq <=> o.seq;
  }
};

struct InstructionInstance {
  InstanceLabel label;
  AccessClass access_class = AccessClass::MARW;
  LoopEnv env;
  std::vector<AccessPair> access;  // concrete locations

  int base_index() const noexcept { return label.base; }
};

struct LoopInfo {
  int id = 0;
  std::string var;
  int parent = 0;  // enclosing loop id, 0 at top level
  std::int64_t trip_count = 0;
};

struct ExpandedProgram {
  std::vector<InstructionInstance> instances;  // in seq order
  std::vector<LoopInfo> loops;                 // by id
  PointsToMap points_to;
  std::vector<VarInfo> variables;  // declaration order
  std::size_t unroll_cap = kDefaultUnrollCap;
};

/// Unrolls every constant-bound loop. Header instructions appear once with
/// a bare label; body instructions get one instance per iteration with a
/// flat per-instruction counter. Throws SymbolicBound, UnrollCapExceeded,
/// NonAffineSubscript, UnboundPointer, UnsupportedConstruct (a loop body
/// writing its own loop variable).
ExpandedProgram expand_loops(const Program& prog,
                             std::size_t cap = kDefaultUnrollCap);

/// Fills `inst.access` from `instr` under `inst.env`.
InstructionInstance resolve_subscripts(const Instruction& instr,
                                       InstructionInstance inst,
                                       const PointsToMap& pts);

}  // namespace ddi
