// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "ddi/error.hpp"
#include "json.hpp"

namespace ddi {

std::string_view to_string(DepKind k) noexcept {
  switch (k) {
    case DepKind::Flow: return "flow";
    case DepKind::Anti: return "anti";
    case DepKind::Output: return "output";
    case DepKind::Input: return "input";
  }
  return "?";
}

bool dependence_less(const Dependence& a, const Dependence& b) {
  if (a.location != b.location) return a.location < b.location;
  if (a.earlier.seq != b.earlier.seq) return a.earlier.seq < b.earlier.seq;
  if (a.later.seq != b.later.seq) return a.later.seq < b.later.seq;
  return a.kind < b.kind;
}

Dependence classify_carried(Dependence d) {
  d.carried = false;
  d.carrier = 0;
  if (d.earlier.header || d.later.header) return d;
  const auto& a = d.earlier.iterations;
  const auto& b = d.later.iterations;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    if (a[k].loop != b[k].loop) break;
    if (a[k].ordinal != b[k].ordinal) {
      d.carried = true;
      d.carrier = a[k].loop;
      break;
    }
  }
  return d;
}

namespace {

std::vector<InstanceLabel> distinct_labels(const DdiGraph& g,
                                           const std::vector<std::size_t>& ids) {
  std::vector<InstanceLabel> out;
  for (std::size_t id : ids) {
    const Edge& e = g.edges()[id];
    if (e.style == EdgeStyle::Solid) out.push_back(e.label);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Dependence> find_dependences(const DdiGraph& g) {
  std::vector<Dependence> deps;
  auto add = [&](DepKind kind, const InstanceLabel& a, const InstanceLabel& b,
                 const MemLocation& loc) {
    Dependence d;
    d.kind = kind;
    d.earlier = a;
    d.later = b;
    d.location = loc;
    deps.push_back(classify_carried(std::move(d)));
  };
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    const MemLocation& loc = g.node(v);
    if (loc.is_sentinel()) continue;
    const auto writes = distinct_labels(g, g.in_edges(v));
    const auto reads = distinct_labels(g, g.out_edges(v));
    for (const auto& l : writes) {
      for (const auto& m : reads) {
        if (l == m) continue;
        if (l < m) {
          add(DepKind::Flow, l, m, loc);
        } else {
          add(DepKind::Anti, m, l, loc);
        }
      }
    }
    for (std::size_t i = 0; i < writes.size(); ++i) {
      for (std::size_t j = i + 1; j < writes.size(); ++j) {
        add(DepKind::Output, writes[i], writes[j], loc);
      }
    }
    for (std::size_t i = 0; i < reads.size(); ++i) {
      for (std::size_t j = i + 1; j < reads.size(); ++j) {
        add(DepKind::Input, reads[i], reads[j], loc);
      }
    }
  }
  std::sort(deps.begin(), deps.end(), dependence_less);
  return deps;
}

std::vector<LabelPair> dependence_closure(const DdiGraph& g, std::size_t cap) {
  const std::size_t n = g.nodes().size();
  // reach[u]: labels of solid edges leaving any non-sentinel node reachable
  // from u through non-sentinel nodes.
  std::vector<std::vector<InstanceLabel>> reach(n);
  std::vector<bool> computed(n, false);
  auto labels_from = [&](std::size_t start) -> const std::vector<InstanceLabel>& {
    if (computed[start]) return reach[start];
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::vector<InstanceLabel> out;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t id : g.out_edges(u)) {
        const Edge& e = g.edges()[id];
        if (e.style != EdgeStyle::Solid) continue;
        out.push_back(e.label);
        if (!seen[e.dst] && !g.node(e.dst).is_sentinel()) {
          seen[e.dst] = true;
          stack.push_back(e.dst);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    computed[start] = true;
    reach[start] = std::move(out);
    return reach[start];
  };

  std::map<std::pair<std::int64_t, std::int64_t>, LabelPair> pairs;
  for (const Edge& e : g.edges()) {
    if (e.style != EdgeStyle::Solid || g.node(e.dst).is_sentinel()) continue;
    for (const auto& m : labels_from(e.dst)) {
      if (m == e.label) continue;
      LabelPair p = e.label < m ? LabelPair{e.label, m} : LabelPair{m, e.label};
      pairs.emplace(std::make_pair(p.first.seq, p.second.seq), std::move(p));
      if (pairs.size() > cap) {
        throw Error(ErrorKind::PathExplosion,
                    "dependence closure exceeds " + std::to_string(cap) +
                        " label pairs");
      }
    }
  }
  std::vector<LabelPair> out;
  out.reserve(pairs.size());
  for (auto& [key, p] : pairs) out.push_back(std::move(p));
  return out;
}

ParallelReport parallelizability_report(const std::vector<Dependence>& deps,
                                        const std::vector<LoopInfo>& loops) {
  ParallelReport r;
  for (const auto& l : loops) {
    LoopVerdict v;
    v.id = l.id;
    v.var = l.var;
    for (const auto& d : deps) {
      if (d.kind == DepKind::Flow && d.carried && d.carrier == l.id) {
        v.blockers.push_back(d);
      }
    }
    v.parallelizable = v.blockers.empty();
    r.loops.push_back(std::move(v));
  }
  return r;
}

std::string format_dependence(const Dependence& d) {
  std::string kind(to_string(d.kind));
  std::transform(kind.begin(), kind.end(), kind.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::string s = kind + " " + d.earlier.str() + " -> " + d.later.str() +
                  " on " + d.location.str();
  if (d.carried) s += " [carried]";
  return s;
}

namespace {

nlohmann::ordered_json dep_json(const Dependence& d) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(d.kind));
  j["earlier"] = d.earlier.str();
  j["later"] = d.later.str();
  j["location"] = d.location.str();
  j["carried"] = d.carried;
  return j;
}

}  // namespace

std::string deps_to_json(const std::vector<Dependence>& deps,
                         const ParallelReport& report,
                         const std::vector<LabelPair>* closure) {
  nlohmann::ordered_json j;
  j["deps"] = nlohmann::ordered_json::array();
  for (const auto& d : deps) j["deps"].push_back(dep_json(d));
  j["loops"] = nlohmann::ordered_json::array();
  for (const auto& l : report.loops) {
    nlohmann::ordered_json jl;
    jl["id"] = l.id;
    jl["var"] = l.var;
    jl["parallelizable"] = l.parallelizable;
    jl["blockers"] = nlohmann::ordered_json::array();
    for (const auto& d : l.blockers) jl["blockers"].push_back(dep_json(d));
    j["loops"].push_back(std::move(jl));
  }
  if (closure != nullptr) {
    j["closure"] = nlohmann::ordered_json::array();
    for (const auto& p : *closure) {
      j["closure"].push_back({p.first.str(), p.second.str()});
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace ddi
