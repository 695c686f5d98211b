// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ddi/classifier.hpp"
#include "ddi/error.hpp"
#include "support.hpp"

namespace ddi {
namespace {

using test::parse;
using Set = std::set<MemLocation>;

MemLocation S(const std::string& n) { return MemLocation::scalar(n); }

AccessPair pair_of(const Program& p, int index, const LoopEnv& env = {}) {
  const auto pairs = extract_access_pairs(p.instruction(index), build_points_to(p), env);
  EXPECT_EQ(pairs.size(), 1u);
  return pairs.empty() ? AccessPair{} : pairs.front();
}

TEST(Classifier, ExampleOneAccessPairs) {
  const Program p = test::load_sample("ex1.ddi");
  EXPECT_EQ(pair_of(p, 1), (AccessPair{Set{S("a"), S("b")}, Set{S("c")}}));
  EXPECT_EQ(pair_of(p, 2), (AccessPair{Set{S("a"), MemLocation::pr()}, Set{S("d")}}));
  EXPECT_EQ(pair_of(p, 3), (AccessPair{Set{S("c"), S("d")}, Set{MemLocation::hu()}}));
  EXPECT_EQ(pair_of(p, 4), (AccessPair{Set{S("a"), MemLocation::pr()}, Set{S("b")}}));
}

TEST(Classifier, Classes) {
  const Program p = parse(
      "int a, b, *p; int x[];\n"
      "a = 5;\n"           // 1
      "b = a;\n"           // 2
      "read a, b;\n"       // 3
      "print a;\n"         // 4
      "if (a > b)\n"       // 5
      "  b = a + 1;\n"     // 6
      "p = &a;\n"          // 7
      "for (i = 0; i < 2; i++) {\n"  // 8 9 10
      "  x[i] = 1;\n"      // 11
      "  break;\n"         // 12
      "}\n");
  EXPECT_EQ(classify_instruction(p.instruction(1)), AccessClass::MAW);
  EXPECT_EQ(classify_instruction(p.instruction(2)), AccessClass::MARW);
  EXPECT_EQ(classify_instruction(p.instruction(3)), AccessClass::MAW);
  EXPECT_EQ(classify_instruction(p.instruction(4)), AccessClass::MAR);
  EXPECT_EQ(classify_instruction(p.instruction(5)), AccessClass::MAR);
  EXPECT_EQ(classify_instruction(p.instruction(6)), AccessClass::MARW);
  EXPECT_EQ(classify_instruction(p.instruction(7)), AccessClass::MARW);
  EXPECT_EQ(classify_instruction(p.instruction(8)), AccessClass::MAW);
  EXPECT_EQ(classify_instruction(p.instruction(9)), AccessClass::MAR);
  EXPECT_EQ(classify_instruction(p.instruction(10)), AccessClass::MARW);
  EXPECT_EQ(classify_instruction(p.instruction(11)), AccessClass::MAW);
  EXPECT_EQ(classify_instruction(p.instruction(12)), AccessClass::NMAI);
}

TEST(Classifier, ConstantWriteReadsProgrammer) {
  const Program p = parse("int a; a = 5;");
  EXPECT_EQ(pair_of(p, 1), (AccessPair{Set{MemLocation::pr()}, Set{S("a")}}));
}

TEST(Classifier, InputReadsHardware) {
  const Program p = parse("int a, b; read a, b;");
  const auto pairs = extract_access_pairs(p.instruction(1), {}, {});
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (AccessPair{Set{MemLocation::hu()}, Set{S("a")}}));
  EXPECT_EQ(pairs[1], (AccessPair{Set{MemLocation::hu()}, Set{S("b")}}));
}

TEST(Classifier, DeclarationInitializersSharePR) {
  const Program p = test::load_sample("ex5.ddi");
  const auto pairs = extract_access_pairs(p.instruction(1), {}, {});
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (AccessPair{Set{MemLocation::pr()}, Set{S("b")}}));
  EXPECT_EQ(pairs[1], (AccessPair{Set{MemLocation::pr()}, Set{S("c")}}));
}

TEST(Classifier, SubscriptsResolveUnderEnvironment) {
  const Program p = test::load_sample("ex2.ddi");
  const LoopEnv env{{"i", 2}};
  const AccessPair ap = pair_of(p, 5, env);
  EXPECT_EQ(ap.reads, (Set{MemLocation::element("a", {1}), MemLocation::element("c", {1})}));
  EXPECT_EQ(ap.writes, (Set{MemLocation::element("a", {3})}));
}

TEST(Classifier, DereferenceUsesLatestBinding) {
  const Program p = parse("int a, b, c, *p; p = &a; c = *p; p = &b; c = *p;");
  const PointsToMap pts = build_points_to(p);
  EXPECT_EQ(pts.lookup("p", 2), "a");
  EXPECT_EQ(pts.lookup("p", 4), "b");
  EXPECT_EQ(pts.lookup("p", 1), std::nullopt);
  EXPECT_EQ(pair_of(p, 2).reads, Set{S("a")});
  EXPECT_EQ(pair_of(p, 4).reads, Set{S("b")});
}

TEST(Classifier, PointerPrintReadsPointerVariable) {
  const Program p = test::load_sample("ex9.ddi");
  EXPECT_EQ(pair_of(p, 4).reads,
            (Set{S("a"), S("c"), MemLocation::pointer("p")}));
}

TEST(Classifier, UnboundPointerIsAnError) {
  const Program p = parse("int a, *p; a = *p;");
  try {
    extract_access_pairs(p.instruction(1), build_points_to(p), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundPointer);
  }
}

TEST(Classifier, LocationOrderAndText) {
  EXPECT_EQ(MemLocation::element("a", {1, 2}).str(), "a[1][2]");
  EXPECT_LT(MemLocation::element("a", {2}), MemLocation::element("a", {10}));
  EXPECT_LT(S("a"), S("b"));
}

}  // namespace
}  // namespace ddi
