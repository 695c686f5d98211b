// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/error.hpp"

namespace ddi {
namespace {

std::string render(ErrorKind kind, const std::string& detail, int line,
                   int column) {
  std::string out(to_string(kind));
  out += ": ";
  out += detail;
  if (line > 0) {
    out += " at " + std::to_string(line) + ":" + std::to_string(column);
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorKind::Semantic: return "SemanticError";
    case ErrorKind::UnboundPointer: return "UnboundPointer";
    case ErrorKind::SymbolicBound: return "SymbolicBound";
    case ErrorKind::UnrollCapExceeded: return "UnrollCapExceeded";
    case ErrorKind::NonAffineSubscript: return "NonAffineSubscript";
    case ErrorKind::PathExplosion: return "PathExplosion";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InputExhausted: return "InputExhausted";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::StepLimit: return "StepLimit";
  }
  return "Error";
}

Error::Error(ErrorKind kind, std::string detail, int line, int column)
    : std::runtime_error(render(kind, detail, line, column)),
      kind_(kind),
      detail_(std::move(detail)),
      line_(line),
      column_(column) {}

}  // namespace ddi
