// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "ddi/expander.hpp"
#include "ddi/generator.hpp"
#include "support.hpp"

namespace ddi {
namespace {

TEST(Generator, SameSeedSameText) {
  EXPECT_EQ(generate_program(42), generate_program(42));
  EXPECT_NE(generate_program(42), generate_program(43));
  EXPECT_EQ(generate_inputs(5, 10), generate_inputs(5, 10));
}

TEST(Generator, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t k = 0; k < 1000; ++k) seeds.insert(derive_seed(7, k));
  EXPECT_EQ(seeds.size(), 1000u);
}

TEST(Generator, ProgramsStayWithinBounds) {
  for (std::uint64_t k = 0; k < 500; ++k) {
    const std::string src = generate_program(derive_seed(13, k));
    const Program p = test::parse(src);
    EXPECT_EQ(src.find("goto"), std::string::npos);
    int scalars = 0;
    int arrays = 0;
    for (const auto& v : p.variables) {
      if (v.loop_var) continue;
      scalars += v.kind == VarKind::Scalar;
      arrays += v.kind == VarKind::Array;
    }
    EXPECT_GE(scalars, 2);
    EXPECT_LE(scalars, 8);
    EXPECT_LE(arrays, 2);
    const ExpandedProgram xp = expand_loops(p);
    for (const auto& l : xp.loops) EXPECT_LE(l.trip_count, 6);
  }
}

TEST(Generator, CoversEveryConstruct) {
  std::string all;
  for (std::uint64_t k = 0; k < 300; ++k) all += generate_program(derive_seed(19, k));
  for (const char* s : {"for (", "if (", "read ", "print ", "break;", "continue;", "*p",
                        "p = &", "[i0", "[i1", "i0--", "+= 1", " / "}) {
    EXPECT_NE(all.find(s), std::string::npos) << s;
  }
}

}  // namespace
}  // namespace ddi
