// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ddi/ast.hpp"

namespace ddi {

struct SourceProgram {
  std::string text;
  std::string origin = "<stdin>";
};

/// Parses mini-language source into an indexed program. For headers yield
/// three consecutive instructions; blocks and plain declarations are not
/// indexed. Throws Error (Parse, UnknownIdentifier, UnsupportedConstruct,
/// Semantic).
Program parse_program(const SourceProgram& src);

struct PrintOptions {
  // Append `// #k` with the instruction index to each indexed line.
  bool index_comments = false;
  // Index to print in those comments, by current index - 1. Used by the
  // transforms to keep the pre-transform numbering visible.
  std::vector<int> original_indices;
};

/// Canonical source text; parse(pretty_print(p)) == p.
std::string pretty_print(const Program& program, const PrintOptions& opts = {});

std::string format_expr(const Expr& e);

/// One instruction as a single line, e.g. `a[2] = b[2] + c[2];` or
/// `i < 5` for a loop condition.
std::string format_instruction(const Instruction& instr);

}  // namespace ddi
