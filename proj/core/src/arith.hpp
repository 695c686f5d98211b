// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "ddi/ast.hpp"

namespace ddi::detail {

enum class ArithFault { None, Overflow, DivisionByZero };

struct ArithResult {
  std::int64_t value = 0;
  ArithFault fault = ArithFault::None;
};

// 64-bit integer semantics shared by the folder and the interpreter:
// overflow traps, division truncates toward zero.
inline ArithResult apply(BinOp op, std::int64_t a, std::int64_t b) {
  ArithResult r;
  bool overflow = false;
  switch (op) {
    case BinOp::Add: overflow = __builtin_add_overflow(a, b, &r.value); break;
    case BinOp::Sub: overflow = __builtin_sub_overflow(a, b, &r.value); break;
    case BinOp::Mul: overflow = __builtin_mul_overflow(a, b, &r.value); break;
    case BinOp::Div:
      if (b == 0) {
        r.fault = ArithFault::DivisionByZero;
        return r;
      }
      if (a == INT64_MIN && b == -1) {
        overflow = true;
        break;
      }
      r.value = a / b;
      break;
    case BinOp::Lt: r.value = a < b; break;
    case BinOp::Le: r.value = a <= b; break;
    case BinOp::Gt: r.value = a > b; break;
    case BinOp::Ge: r.value = a >= b; break;
    case BinOp::Eq: r.value = a == b; break;
    case BinOp::Ne: r.value = a != b; break;
  }
  if (overflow) r.fault = ArithFault::Overflow;
  return r;
}

inline ArithResult negate(std::int64_t a) {
  ArithResult r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r.value)) {
    r.fault = ArithFault::Overflow;
  }
  return r;
}

}  // namespace ddi::detail
