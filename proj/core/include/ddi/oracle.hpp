// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

// Ground truth for the analyzer and the transforms: a reference interpreter
// and a pairwise dependence finder over the expanded instruction stream. Neither
// looks at the graph.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ddi/analyzer.hpp"
#include "ddi/ast.hpp"
#include "ddi/expander.hpp"

namespace ddi {

enum class AccessMode { Read, Write };

struct AccessEvent {
  std::int64_t seq = 0;  // dynamic instruction count
  int base = 0;
  std::string label;  // `s` or `s.k`, k counting executions of s
  std::vector<IterationPoint> iterations;
  MemLocation location;
  AccessMode mode = AccessMode::Read;
};

struct InterpretOptions {
  std::size_t step_limit = 1'000'000;
  bool trace = false;
};

struct ExecutionResult {
  std::vector<std::int64_t> printed;
  std::map<MemLocation, std::int64_t> final_store;
  std::vector<AccessEvent> trace;  // filled when requested
};

/// Runs the program. Storage starts at zero, `read` consumes `inputs` in
/// order and `print p` shows a stable address derived from the pointee's
/// name. Throws UnboundPointer, DivisionByZero, InputExhausted, Overflow,
/// StepLimit.
ExecutionResult interpret(const Program& prog,
                          const std::vector<std::int64_t>& inputs,
                          const InterpretOptions& opts = {});

/// Every ordered pair of accesses to one variable location by two distinct
/// instances, taken from the instances' access pairs.
std::vector<Dependence> brute_force_dependences(const ExpandedProgram& xp);

using DependenceFinder = std::function<std::vector<Dependence>(const DdiGraph&)>;

struct Verdict {
  bool pass = false;
  std::vector<Dependence> analyzer_only;
  std::vector<Dependence> oracle_only;

  /// One line per differing dependence, prefixed `+` (analyzer only) or
  /// `-` (oracle only).
  std::string diff() const;
};

/// Compares `finder` (the analyzer by default) against the brute-force set.
Verdict verify_equivalence(const Program& prog,
                           std::size_t cap = kDefaultUnrollCap,
                           const DependenceFinder& finder = find_dependences);

}  // namespace ddi
