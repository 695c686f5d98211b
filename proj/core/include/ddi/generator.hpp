// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ddi {

struct GeneratorOptions {
  int max_scalars = 8;
  int max_arrays = 2;
  int max_pointers = 1;
  int max_loop_depth = 2;
  int max_trip = 6;
  int max_statements = 20;
};

/// Source text of a random well-formed program. The same seed always gives
/// the same text. Programs use `read`, `print`, ifs, break and continue,
/// loops and at most one pointer, and never goto.
std::string generate_program(std::uint64_t seed,
                             const GeneratorOptions& opts = {});

/// Seed of trial `k` in a batch started from `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) noexcept;

/// `count` small integers for `read` statements.
std::vector<std::int64_t> generate_inputs(std::uint64_t seed, std::size_t count);

}  // namespace ddi
