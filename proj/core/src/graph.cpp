// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ddi {

DdiGraph::DdiGraph() {
  add_node(MemLocation::pr());
  add_node(MemLocation::hu());
}

std::size_t DdiGraph::add_node(const MemLocation& loc) {
  auto [it, inserted] = ids_.emplace(loc, nodes_.size());
  if (inserted) {
    nodes_.push_back(loc);
    in_.emplace_back();
    out_.emplace_back();
  }
  return it->second;
}

bool DdiGraph::add_edge(const MemLocation& src, const MemLocation& dst,
                        const InstanceLabel& label, EdgeStyle style) {
  const std::size_t s = add_node(src);
  const std::size_t d = add_node(dst);
  if (!keys_.emplace(s, d, label.seq, style).second) return false;
  const std::size_t id = edges_.size();
  edges_.push_back({s, d, label, style});
  out_[s].push_back(id);
  in_[d].push_back(id);
  return true;
}

std::optional<std::size_t> DdiGraph::find(const MemLocation& loc) const {
  auto it = ids_.find(loc);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> DdiGraph::matrix_order() const {
  std::vector<std::size_t> order;
  for (std::size_t i = 2; i < nodes_.size(); ++i) order.push_back(i);
  order.push_back(kPR);
  order.push_back(kHU);
  return order;
}

DdiGraph build_graph(const ExpandedProgram& xp) {
  return build_graph(xp, xp.points_to);
}

DdiGraph build_graph(const ExpandedProgram& xp, const PointsToMap& pts) {
  DdiGraph g;
  for (const auto& v : xp.variables) {
    switch (v.kind) {
      case VarKind::Scalar:
        g.add_node(MemLocation::scalar(v.name));
        break;
      case VarKind::Pointer:
        g.add_node(MemLocation::pointer(v.name));
        break;
      case VarKind::Array:
        break;
    }
  }
  for (const auto& inst : xp.instances) {
    for (const auto& pair : inst.access) {
      for (const auto& r : pair.reads) {
        for (const auto& w : pair.writes) {
          g.add_edge(r, w, inst.label, EdgeStyle::Solid);
        }
      }
    }
  }
  // Pointer assignments carry no access pair; each yields one dashed edge.
  for (const auto& b : pts.bindings()) {
    for (const auto& inst : xp.instances) {
      if (inst.label.base == b.position) {
        g.add_edge(MemLocation::scalar(b.pointee),
                   MemLocation::pointer(b.pointer), inst.label,
                   EdgeStyle::Dashed);
        break;
      }
    }
  }
  return g;
}

namespace {

std::string join_labels(const std::vector<InstanceLabel>& labels) {
  std::string s;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) s += ",";
    s += labels[k].str();
  }
  return s;
}

}  // namespace

AdjacencyMatrix to_adjacency_matrix(const DdiGraph& g) {
  AdjacencyMatrix m;
  const auto order = g.matrix_order();
  std::vector<std::size_t> pos(g.nodes().size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    m.order.push_back(g.node(order[k]));
    pos[order[k]] = k;
  }
  m.cells.assign(order.size(),
                 std::vector<std::vector<InstanceLabel>>(order.size()));
  for (const auto& e : g.edges()) {
    if (e.style == EdgeStyle::Solid) {
      m.cells[pos[e.src]][pos[e.dst]].push_back(e.label);
    }
  }
  for (auto& row : m.cells) {
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
  }
  return m;
}

std::string AdjacencyMatrix::to_text() const {
  const std::size_t n = order.size();
  std::vector<std::vector<std::string>> grid(n + 1,
                                             std::vector<std::string>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    grid[0][k + 1] = order[k].str();
    grid[k + 1][0] = order[k].str();
    for (std::size_t c = 0; c < n; ++c) grid[k + 1][c + 1] = join_labels(cells[k][c]);
  }
  std::vector<std::size_t> width(n + 1, 1);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    os << '|';
    for (std::size_t c = 0; c <= n; ++c) {
      os << ' ' << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
    }
    os << '\n';
  };
  line(grid[0]);
  os << '|';
  for (std::size_t c = 0; c <= n; ++c) os << std::string(width[c] + 2, '-') << '|';
  os << '\n';
  for (std::size_t r = 1; r <= n; ++r) line(grid[r]);
  return os.str();
}

std::vector<const Edge*> sorted_edges(const DdiGraph& g) {
  std::vector<const Edge*> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.push_back(&e);
  std::sort(out.begin(), out.end(), [&](const Edge* a, const Edge* b) {
    const auto& as = g.node(a->src);
    const auto& bs = g.node(b->src);
    if (as != bs) return as < bs;
    const auto& ad = g.node(a->dst);
    const auto& bd = g.node(b->dst);
    if (ad != bd) return ad < bd;
    if (a->label.seq != b->label.seq) return a->label.seq < b->label.seq;
    return a->style < b->style;
  });
  return out;
}

namespace {

std::vector<MemLocation> sorted_nodes(const DdiGraph& g) {
  std::vector<MemLocation> nodes = g.nodes();
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const DdiGraph& g) {
  std::ostringstream os;
  os << "digraph ddi {\n";
  for (const auto& n : sorted_nodes(g)) {
    os << "  " << quote(n.str());
    if (n.is_sentinel()) os << " [shape=box]";
    os << ";\n";
  }
  for (const Edge* e : sorted_edges(g)) {
    os << "  " << quote(g.node(e->src).str()) << " -> "
       << quote(g.node(e->dst).str()) << " [label=" << quote(e->label.str());
    if (e->style == EdgeStyle::Dashed) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const DdiGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : sorted_nodes(g)) j["nodes"].push_back(n.str());
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge* e : sorted_edges(g)) {
    nlohmann::ordered_json je;
    je["src"] = g.node(e->src).str();
    je["dst"] = g.node(e->dst).str();
    je["label"] = e->label.str();
    je["seq"] = e->label.seq;
    je["dashed"] = e->style == EdgeStyle::Dashed;
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

std::string to_text(const DdiGraph& g) {
  std::ostringstream os;
  for (const Edge* e : sorted_edges(g)) {
    os << g.node(e->src).str() << " -> " << g.node(e->dst).str() << " ["
       << e->label.str() << "]";
    if (e->style == EdgeStyle::Dashed) os << " dashed";
    os << '\n';
  }
  return os.str();
}

}  // namespace ddi
