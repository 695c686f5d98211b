// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddi/ast.hpp"
#include "ddi/expander.hpp"
#include "ddi/graph.hpp"

namespace ddi {

struct RewrittenRead {
  int instruction = 0;  // original index
  std::string variable;
  std::int64_t constant = 0;

  bool operator==(const RewrittenRead&) const = default;
};

struct RemovedInitializer {
  int instruction = 0;  // original index of the declaration
  std::string variable;

  bool operator==(const RemovedInitializer&) const = default;
};

struct TransformReport {
  std::vector<int> removed_instructions;  // original indices, ascending
  std::vector<std::string> removed_variables;
  std::vector<RemovedInitializer> removed_initializers;
  std::vector<RewrittenRead> rewritten_reads;
  // Induction variables: every node with a self-loop inside a loop, the
  // subset stepped by a constant, linear functions of the former, and the
  // self-loop nodes that fail the constant-step test.
  std::vector<std::string> induction_basic;
  std::vector<std::string> induction_refined;
  std::vector<std::string> induction_derived;
  std::vector<std::string> flagged;

  std::string to_json() const;
};

struct TransformResult {
  Program program;
  // Original index of each instruction of `program`, by index - 1.
  std::vector<int> origin;
  // `program` printed with `// #k` comments carrying original indices.
  std::string source;
  TransformReport report;
};

/// Removes unused variables, writes that are never read, and writes
/// overwritten before any read, to a fixpoint. Only straight-line code
/// outside loops and ifs is touched; output, input, conditions and loop
/// headers are never removed. Kill-based removal is skipped when the
/// program uses goto.
TransformResult eliminate_dead_code(const Program& prog,
                                    std::size_t cap = kDefaultUnrollCap);

/// Replaces reads of a location by the literal last written to it at top
/// level, up to and including the next write. One pass unless `iterate`.
TransformResult propagate_constants(const Program& prog, bool iterate = false,
                                    std::size_t cap = kDefaultUnrollCap);

/// Fills the four induction fields of a report from a graph.
TransformReport detect_induction_variables(const DdiGraph& g);

}  // namespace ddi
