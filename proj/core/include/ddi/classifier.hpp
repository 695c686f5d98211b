// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ddi/ast.hpp"

namespace ddi {

enum class AccessClass { NMAI, MAR, MAW, MARW };

std::string_view to_string(AccessClass c) noexcept;

/// A graph node: a scalar, a concrete array element, a pointer read by
/// value, or one of the two sentinels PR (constants) and HU (I/O).
struct MemLocation {
  enum class Kind { Scalar, ArrayElem, PointerVar, PR, HU };

  // Member order fixes the sort order: by name, then subscripts.
  std::string name;
  std::vector<std::int64_t> subscripts;
  Kind kind = Kind::Scalar;

  static MemLocation scalar(std::string n);
  static MemLocation element(std::string n, std::vector<std::int64_t> subs);
  static MemLocation pointer(std::string n);
  static MemLocation pr();
  static MemLocation hu();

  bool is_sentinel() const noexcept {
    return kind == Kind::PR || kind == Kind::HU;
  }
  /// `a`, `a[2][3]`, `PR`, `HU`.
  std::string str() const;

  auto operator<=>(const MemLocation&) const = default;
  bool operator==(const MemLocation&) const = default;
};

struct AccessPair {
  std::set<MemLocation> reads;
  std::set<MemLocation> writes;

  bool operator==(const AccessPair&) const = default;
};

/// Flow-sensitive pointer bindings keyed by instruction index.
class PointsToMap {
 public:
  struct Binding {
    std::string pointer;
    std::string pointee;
    int position = 0;
  };

  void bind(std::string pointer, std::string pointee, int position);
  /// Target of the latest binding of `pointer` made strictly before
  /// `position`.
  std::optional<std::string> lookup(std::string_view pointer,
                                    int position) const;
  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  bool empty() const noexcept { return bindings_.empty(); }

 private:
  std::vector<Binding> bindings_;
};

/// Values of the loop variables in scope for one instruction instance.
using LoopEnv = std::map<std::string, std::int64_t, std::less<>>;

AccessClass classify_instruction(const Instruction& instr);

/// Access pairs of one instruction instance. Declarations yield one pair per
/// initialized item and `read` one pair per target; NMAI instructions and
/// pointer assignments yield none. Throws UnboundPointer,
/// NonAffineSubscript.
std::vector<AccessPair> extract_access_pairs(const Instruction& instr,
                                             const PointsToMap& pts,
                                             const LoopEnv& env = {});

/// Location named by an lvalue read or written at instruction `position`:
/// subscripts are evaluated under `env` and `*p` goes through `pts`.
MemLocation resolve_location(const Expr& lvalue, int position,
                             const PointsToMap& pts, const LoopEnv& env = {});

/// Records `p = &x`; other instructions leave the map unchanged.
PointsToMap record_pointer_assign(const Instruction& instr, PointsToMap pts);

/// Folds every pointer assignment of the program, in index order.
PointsToMap build_points_to(const Program& prog);

/// Evaluates an affine subscript: sums of constants and loop variables
/// scaled by constants. Throws NonAffineSubscript otherwise.
std::int64_t evaluate_subscript(const Expr& e, const LoopEnv& env);

}  // namespace ddi
