// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ddi/analyzer.hpp"
#include "ddi/error.hpp"
#include "ddi/expander.hpp"
#include "ddi/generator.hpp"
#include "ddi/graph.hpp"
#include "json.hpp"
#include "support.hpp"

namespace ddi {
namespace {

std::vector<std::string> lines_of(const std::vector<Dependence>& deps) {
  std::vector<std::string> out;
  for (const auto& d : deps) out.push_back(format_dependence(d));
  return out;
}

bool has(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

TEST(Analyzer, ExampleOneKinds) {
  const auto deps = lines_of(find_dependences(build_graph(expand_loops(test::load_sample("ex1.ddi")))));
  EXPECT_TRUE(has(deps, "FLOW 1 -> 3 on c"));
  EXPECT_TRUE(has(deps, "FLOW 2 -> 3 on d"));
  EXPECT_TRUE(has(deps, "ANTI 1 -> 4 on b"));
  EXPECT_TRUE(has(deps, "INPUT 1 -> 2 on a"));
  EXPECT_EQ(deps.size(), 6u);
}

TEST(Analyzer, OutputDependence) {
  const auto deps = lines_of(find_dependences(
      build_graph(expand_loops(test::parse("int a, b; a = 1; a = b; print a;")))));
  EXPECT_TRUE(has(deps, "OUTPUT 1 -> 2 on a"));
  EXPECT_TRUE(has(deps, "FLOW 2 -> 3 on a"));
}

TEST(Analyzer, ExampleTwoCarriedFlow) {
  const ExpandedProgram xp = expand_loops(test::load_sample("ex2.ddi"));
  const auto deps = find_dependences(build_graph(xp));
  std::vector<std::string> carried_flow;
  for (const auto& d : deps) {
    if (d.carried && d.kind == DepKind::Flow) carried_flow.push_back(format_dependence(d));
  }
  EXPECT_TRUE(has(carried_flow, "FLOW 4.1 -> 5.2 on a[2] [carried]"));
  EXPECT_TRUE(has(carried_flow, "FLOW 4.2 -> 5.3 on a[3] [carried]"));
  for (const auto& s : carried_flow) {
    EXPECT_TRUE(s.find("on a[2]") != std::string::npos || s.find("on a[3]") != std::string::npos) << s;
  }
  const ParallelReport rep = parallelizability_report(deps, xp.loops);
  ASSERT_EQ(rep.loops.size(), 1u);
  EXPECT_FALSE(rep.loops[0].parallelizable);
}

TEST(Analyzer, ExampleThreeInnerLoopParallel) {
  const ExpandedProgram xp = expand_loops(test::load_sample("ex3.ddi"));
  const auto rep = parallelizability_report(find_dependences(build_graph(xp)), xp.loops);
  ASSERT_EQ(rep.loops.size(), 2u);
  EXPECT_FALSE(rep.loops[0].parallelizable);
  EXPECT_TRUE(rep.loops[1].parallelizable);
  for (const auto& d : rep.loops[0].blockers) EXPECT_EQ(d.carrier, 1);
}

TEST(Analyzer, ExampleFourScalarsCarried) {
  const auto deps = lines_of(find_dependences(build_graph(expand_loops(test::load_sample("ex4.ddi")))));
  EXPECT_TRUE(has(deps, "FLOW 6.1 -> 5.2 on c [carried]"));
  EXPECT_TRUE(has(deps, "FLOW 5.1 -> 6.1 on s"));
  EXPECT_TRUE(has(deps, "FLOW 5.2 -> 6.2 on s"));
}

TEST(Analyzer, SequentialLoopsDoNotCarry) {
  const ExpandedProgram xp = expand_loops(test::parse(
      "int x[];\n"
      "for (i = 0; i < 3; i++) x[i] = i;\n"
      "for (j = 0; j < 3; j++) x[j] = x[j] + 1;\n"));
  const auto deps = find_dependences(build_graph(xp));
  for (const auto& d : deps) {
    if (d.location.kind == MemLocation::Kind::ArrayElem) EXPECT_FALSE(d.carried) << format_dependence(d);
  }
  for (const auto& l : parallelizability_report(deps, xp.loops).loops) {
    EXPECT_TRUE(l.parallelizable);
  }
}

TEST(Analyzer, ExampleNineIgnoresDashedEdge) {
  const auto deps = find_dependences(build_graph(expand_loops(test::load_sample("ex9.ddi"))));
  const auto lines = lines_of(deps);
  EXPECT_TRUE(has(lines, "FLOW 1 -> 3 on a"));
  for (const auto& d : deps) {
    EXPECT_NE(d.earlier.base, 2);
    EXPECT_NE(d.later.base, 2);
  }
}

TEST(Analyzer, ClosureCoversDirectDependences) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const DdiGraph g = build_graph(expand_loops(test::parse(generate_program(derive_seed(21, k)))));
    const auto closure = dependence_closure(g);
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& p : closure) {
      ASSERT_LT(p.first.seq, p.second.seq);
      pairs.insert({p.first.seq, p.second.seq});
    }
    for (const auto& d : find_dependences(g)) {
      // a write then read of one node is a path of length 2
      if (d.kind == DepKind::Flow) {
        EXPECT_TRUE(pairs.count({d.earlier.seq, d.later.seq})) << format_dependence(d);
      }
    }
  }
}

TEST(Analyzer, ClosureFollowsLongerPaths) {
  const DdiGraph g = build_graph(expand_loops(test::parse("int a, b, c, d; b = a; c = b; d = c;")));
  bool found = false;
  for (const auto& p : dependence_closure(g)) found |= p.first.seq == 1 && p.second.seq == 3;
  EXPECT_TRUE(found);
}

TEST(Analyzer, ClosureStopsAtHardware) {
  const DdiGraph g = build_graph(expand_loops(test::parse("int a, b; print a; read b;")));
  EXPECT_TRUE(dependence_closure(g).empty());
}

TEST(Analyzer, ClosureCap) {
  const DdiGraph g = build_graph(expand_loops(test::load_sample("ex4.ddi")));
  try {
    dependence_closure(g, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PathExplosion);
  }
}

TEST(Analyzer, JsonReport) {
  const ExpandedProgram xp = expand_loops(test::load_sample("ex2.ddi"));
  const auto deps = find_dependences(build_graph(xp));
  const auto j = nlohmann::json::parse(deps_to_json(deps, parallelizability_report(deps, xp.loops)));
  ASSERT_EQ(j["loops"].size(), 1u);
  EXPECT_FALSE(j["loops"][0]["parallelizable"].get<bool>());
  bool seen = false;
  for (const auto& d : j["deps"]) {
    seen |= d["kind"] == "flow" && d["earlier"] == "4.1" && d["later"] == "5.2" &&
            d["location"] == "a[2]" && d["carried"].get<bool>();
  }
  EXPECT_TRUE(seen);
  EXPECT_FALSE(j.contains("closure"));
}

TEST(AnalyzerProperty, DependencesAreOrderedAndSorted) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto deps = find_dependences(
        build_graph(expand_loops(test::parse(generate_program(derive_seed(8, k))))));
    for (std::size_t n = 0; n < deps.size(); ++n) {
      EXPECT_LT(deps[n].earlier.seq, deps[n].later.seq);
      EXPECT_FALSE(deps[n].location.is_sentinel());
      if (n) EXPECT_FALSE(dependence_less(deps[n], deps[n - 1]));
    }
  }
}

}  // namespace
}  // namespace ddi
