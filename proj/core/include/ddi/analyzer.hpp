// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ddi/expander.hpp"
#include "ddi/graph.hpp"

namespace ddi {

enum class DepKind { Flow, Anti, Output, Input };

std::string_view to_string(DepKind k) noexcept;

struct Dependence {
  DepKind kind = DepKind::Flow;
  InstanceLabel earlier;
  InstanceLabel later;
  MemLocation location;
  bool carried = false;
  int carrier = 0;  // loop id carrying the dependence when carried

  /// Identity for set comparison: kind, both labels and the location.
  bool same_as(const Dependence& o) const noexcept {
    return kind == o.kind && earlier.seq == o.earlier.seq &&
           later.seq == o.later.seq && location == o.location;
  }
};

/// Sort key used by every producer of dependence lists.
bool dependence_less(const Dependence& a, const Dependence& b);

/// All flow, anti, output and input dependences read off the solid edges at
/// each variable node, classified as carried or not. Sorted by
/// (location, earlier, later, kind).
std::vector<Dependence> find_dependences(const DdiGraph& g);

/// Carried when both endpoints are loop-body instances of a common loop in
/// different iterations; the carrier is the outermost such loop.
Dependence classify_carried(Dependence d);

struct LabelPair {
  InstanceLabel first;  // first.seq < second.seq
  InstanceLabel second;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Label pairs joined by a directed solid walk whose interior nodes are
/// neither PR nor HU. Throws PathExplosion beyond `cap` pairs.
std::vector<LabelPair> dependence_closure(const DdiGraph& g,
                                          std::size_t cap = kDefaultClosureCap);

struct LoopVerdict {
  int id = 0;
  std::string var;
  bool parallelizable = true;
  std::vector<Dependence> blockers;  // carried flow dependences
};

struct ParallelReport {
  std::vector<LoopVerdict> loops;
};

ParallelReport parallelizability_report(const std::vector<Dependence>& deps,
                                        const std::vector<LoopInfo>& loops);

/// `FLOW 4.1 -> 5.2 on a[2] [carried]`
std::string format_dependence(const Dependence& d);

std::string deps_to_json(const std::vector<Dependence>& deps,
                         const ParallelReport& report,
                         const std::vector<LabelPair>* closure = nullptr);

}  // namespace ddi
