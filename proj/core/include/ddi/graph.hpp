// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ddi/classifier.hpp"
#include "ddi/expander.hpp"

namespace ddi {

enum class EdgeStyle { Solid, Dashed };

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  InstanceLabel label;
  EdgeStyle style = EdgeStyle::Solid;
};

/// Labeled directed multigraph over variables, array elements, PR and HU.
/// An edge r -> w labeled k means instance k reads r and writes w.
class DdiGraph {
 public:
  DdiGraph();

  std::size_t add_node(const MemLocation& loc);
  /// Adds the edge unless the same (src, dst, label, style) is present.
  bool add_edge(const MemLocation& src, const MemLocation& dst,
                const InstanceLabel& label, EdgeStyle style);

  const std::vector<MemLocation>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const MemLocation& node(std::size_t id) const { return nodes_.at(id); }
  std::optional<std::size_t> find(const MemLocation& loc) const;

  const std::vector<std::size_t>& in_edges(std::size_t node) const {
    return in_.at(node);
  }
  const std::vector<std::size_t>& out_edges(std::size_t node) const {
    return out_.at(node);
  }

  static constexpr std::size_t kPR = 0;
  static constexpr std::size_t kHU = 1;

  /// Variables in first-appearance order, then PR, then HU.
  std::vector<std::size_t> matrix_order() const;

 private:
  std::vector<MemLocation> nodes_;
  std::map<MemLocation, std::size_t> ids_;
  std::vector<Edge> edges_;
  std::set<std::tuple<std::size_t, std::size_t, std::int64_t, EdgeStyle>>
      keys_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Every declared scalar and pointer becomes a node even when unused; array
/// elements appear as they are first accessed.
DdiGraph build_graph(const ExpandedProgram& xp);
DdiGraph build_graph(const ExpandedProgram& xp, const PointsToMap& pts);

struct AdjacencyMatrix {
  std::vector<MemLocation> order;
  // cells[r][c]: labels of solid edges order[r] -> order[c], by seq
  std::vector<std::vector<std::vector<InstanceLabel>>> cells;

  /// Pipe table with multiple labels in a cell joined by commas.
  std::string to_text() const;
};

AdjacencyMatrix to_adjacency_matrix(const DdiGraph& g);

/// Edges sorted by source, destination, then label.
std::vector<const Edge*> sorted_edges(const DdiGraph& g);

std::string to_dot(const DdiGraph& g);
std::string to_json(const DdiGraph& g);
/// One `src -> dst [label]` line per edge, dashed edges marked.
std::string to_text(const DdiGraph& g);

}  // namespace ddi
