// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddi {

enum class ErrorKind {
  Parse,
  UnknownIdentifier,
  UnsupportedConstruct,
  Semantic,
  UnboundPointer,
  SymbolicBound,
  UnrollCapExceeded,
  NonAffineSubscript,
  PathExplosion,
  DivisionByZero,
  InputExhausted,
  Overflow,
  StepLimit,
};

/// Category name as printed on the command line, e.g. "ParseError".
std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. Source positions are
/// 1-based and zero when unknown.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, int line = 0, int column = 0);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  int line_;
  int column_;
};

}  // namespace ddi
