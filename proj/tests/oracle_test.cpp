// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ddi/analyzer.hpp"
#include "ddi/error.hpp"
#include "ddi/expander.hpp"
#include "ddi/generator.hpp"
#include "ddi/graph.hpp"
#include "ddi/oracle.hpp"
#include "support.hpp"

namespace ddi {
namespace {

using Out = std::vector<std::int64_t>;

ErrorKind run_error(const std::string& text, const Out& inputs = {}) {
  try {
    interpret(test::parse(text), inputs);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::Parse;
}

TEST(Interpreter, Samples) {
  EXPECT_EQ(interpret(test::load_sample("ex5.ddi"), {}).printed, Out{30});
  EXPECT_EQ(interpret(test::load_sample("ex6.ddi"), {}).printed, (Out{8, 15}));
  EXPECT_EQ(interpret(test::load_sample("ex7.ddi"), {}).printed, Out{8});
  const Out nine = interpret(test::load_sample("ex9.ddi"), {}).printed;
  ASSERT_EQ(nine.size(), 3u);
  EXPECT_GT(nine[0], 0);
  EXPECT_EQ(nine[1], 3);
  EXPECT_EQ(nine[2], 6);
}

TEST(Interpreter, LoopsBreakContinue) {
  EXPECT_EQ(interpret(test::parse("int s; for (i = 0; i < 5; i++) { if (i == 3) break; s = s + i; } print s;"), {})
                .printed,
            Out{3});
  EXPECT_EQ(interpret(test::parse("int s; for (i = 5; i > 0; i--) { if (i == 3) continue; s = s + i; } print s;"), {})
                .printed,
            Out{12});
  EXPECT_EQ(interpret(test::parse("int s; for (i = 0; i <= 9; i += 3) s = s + i; print s, i;"), {})
                .printed,
            (Out{18, 12}));
}

TEST(Interpreter, ReadAndArrays) {
  const auto r = interpret(test::parse("int a; int x[][]; read a; x[1][a] = a * 2; print x[1][a], x[0][0];"), {4});
  EXPECT_EQ(r.printed, (Out{8, 0}));
  EXPECT_EQ(r.final_store.at(MemLocation::element("x", {1, 4})), 8);
}

TEST(Interpreter, ForwardGoto) {
  EXPECT_EQ(interpret(test::parse("int a; a = 1; goto L; a = 2; L: print a;"), {}).printed, Out{1});
}

TEST(Interpreter, DivisionTruncatesTowardZero) {
  EXPECT_EQ(interpret(test::parse("int a; a = -7; print a / 2;"), {}).printed, Out{-3});
}

TEST(Interpreter, Errors) {
  EXPECT_EQ(run_error("int a, b; print a / b;"), ErrorKind::DivisionByZero);
  EXPECT_EQ(run_error("int a; read a;"), ErrorKind::InputExhausted);
  EXPECT_EQ(run_error("int a; a = 9223372036854775807; a = a + 1;"), ErrorKind::Overflow);
  InterpretOptions opts;
  opts.step_limit = 10;
  try {
    interpret(test::parse("int x[]; for (i = 0; i < 100; i++) x[i] = i;"), {}, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepLimit);
  }
}

TEST(Interpreter, TraceLabelsCountExecutions) {
  InterpretOptions opts;
  opts.trace = true;
  const auto r = interpret(test::load_sample("ex4.ddi"), {}, opts);
  std::set<std::string> labels;
  for (const auto& ev : r.trace) labels.insert(ev.label);
  EXPECT_TRUE(labels.count("5.2"));
  EXPECT_TRUE(labels.count("6.2"));
  EXPECT_FALSE(labels.count("5.3"));
}

// Every access the interpreter performs is one the expanded access pairs of
// the same instruction predicted.
TEST(OracleProperty, TraceWithinAccessPairs) {
  int checked = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const std::uint64_t seed = derive_seed(17, k);
    const Program p = test::parse(generate_program(seed));
    const ExpandedProgram xp = expand_loops(p);
    std::map<int, std::set<std::pair<MemLocation, AccessMode>>> predicted;
    for (const auto& inst : xp.instances) {
      for (const auto& ap : inst.access) {
        for (const auto& r : ap.reads) predicted[inst.label.base].insert({r, AccessMode::Read});
        for (const auto& w : ap.writes) predicted[inst.label.base].insert({w, AccessMode::Write});
      }
    }
    InterpretOptions opts;
    opts.trace = true;
    ExecutionResult run;
    try {
      run = interpret(p, generate_inputs(seed, 256), opts);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    for (const auto& ev : run.trace) {
      ASSERT_TRUE(predicted[ev.base].count({ev.location, ev.mode}))
          << ev.label << " " << ev.location.str() << "\n" << pretty_print(p);
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(OracleProperty, StraightLineTraceMatchesAccessPairsExactly) {
  const Program p = test::parse("int a, b = 2, c; int x[]; read a; c = a + b * 3; x[2] = c; print x[2], 7;");
  const ExpandedProgram xp = expand_loops(p);
  InterpretOptions opts;
  opts.trace = true;
  const auto run = interpret(p, {5}, opts);
  std::set<std::pair<std::string, std::string>> traced, predicted;
  for (const auto& ev : run.trace) {
    traced.insert({ev.label, (ev.mode == AccessMode::Read ? "r:" : "w:") + ev.location.str()});
  }
  for (const auto& inst : xp.instances) {
    for (const auto& ap : inst.access) {
      for (const auto& r : ap.reads) predicted.insert({inst.label.str(), "r:" + r.str()});
      for (const auto& w : ap.writes) predicted.insert({inst.label.str(), "w:" + w.str()});
    }
  }
  EXPECT_EQ(traced, predicted);
}

TEST(Oracle, SamplesAgree) {
  for (int k = 1; k <= 9; ++k) {
    const std::string name = "ex" + std::to_string(k) + ".ddi";
    const Verdict v = verify_equivalence(test::load_sample(name));
    EXPECT_TRUE(v.pass) << name << "\n" << v.diff();
  }
}

TEST(OracleProperty, AnalyzerMatchesBruteForce) {
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Program p = test::parse(generate_program(derive_seed(1, k)));
    const Verdict v = verify_equivalence(p);
    ASSERT_TRUE(v.pass) << pretty_print(p) << v.diff();
  }
}

// A finder that silently drops dependences must be caught.
TEST(OracleProperty, MutatedAnalyzerIsDetected) {
  const DependenceFinder drop_carried = [](const DdiGraph& g) {
    auto deps = find_dependences(g);
    std::erase_if(deps, [](const Dependence& d) { return d.carried; });
    return deps;
  };
  const DependenceFinder flip_anti = [](const DdiGraph& g) {
    auto deps = find_dependences(g);
    for (auto& d : deps) {
      if (d.kind == DepKind::Anti) d.kind = DepKind::Flow;
    }
    return deps;
  };
  EXPECT_FALSE(verify_equivalence(test::load_sample("ex2.ddi"), kDefaultUnrollCap, drop_carried).pass);
  int caught = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const Program p = test::parse(generate_program(derive_seed(2, k)));
    caught += !verify_equivalence(p, kDefaultUnrollCap, flip_anti).pass;
  }
  EXPECT_GT(caught, 50);
}

TEST(Oracle, DiffNamesMissingDependences) {
  const DependenceFinder none = [](const DdiGraph&) { return std::vector<Dependence>{}; };
  const Verdict v = verify_equivalence(test::load_sample("ex1.ddi"), kDefaultUnrollCap, none);
  EXPECT_FALSE(v.pass);
  EXPECT_TRUE(v.analyzer_only.empty());
  EXPECT_EQ(v.oracle_only.size(), 6u);
  EXPECT_NE(v.diff().find("FLOW 1 -> 3 on c"), std::string::npos);
}

}  // namespace
}  // namespace ddi
