// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddi/generator.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ddi {
namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const GeneratorOptions& opts)
      : rng_(seed), opts_(opts), budget_(opts.max_statements) {}

  std::string run() {
    const int n_scalars = pick(2, std::max(2, opts_.max_scalars));
    for (int k = 0; k < n_scalars; ++k) scalars_.push_back("v" + std::to_string(k));
    const int n_arrays = pick(0, opts_.max_arrays);
    for (int k = 0; k < n_arrays; ++k) {
      arrays_.push_back({"a" + std::to_string(k), pick(1, 2)});
    }
    has_pointer_ = opts_.max_pointers > 0 && chance(0.4);

    os_ << "int ";
    for (int k = 0; k < n_scalars; ++k) {
      if (k) os_ << ", ";
      os_ << scalars_[k];
      if (chance(0.4)) os_ << " = " << pick(-5, 9);
    }
    os_ << ";\n";
    if (!arrays_.empty()) {
      os_ << "int ";
      for (std::size_t k = 0; k < arrays_.size(); ++k) {
        if (k) os_ << ", ";
        os_ << arrays_[k].name << (arrays_[k].rank == 1 ? "[]" : "[][]");
      }
      os_ << ";\n";
    }
    if (has_pointer_) {
      os_ << "int *p;\n";
      os_ << "p = &" << any_scalar() << ";\n";
      --budget_;
    }
    while (budget_ > 1) statement(0, false);
    os_ << "print " << any_scalar() << ", " << any_scalar() << ";\n";
    return os_.str();
  }

 private:
  struct Array {
    std::string name;
    int rank;
  };

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  const std::string& any_scalar() {
    return scalars_[static_cast<std::size_t>(pick(0, static_cast<int>(scalars_.size()) - 1))];
  }

  void indent(int depth) { os_ << std::string(static_cast<std::size_t>(depth) * 2, ' '); }

  std::string subscript() {
    if (loop_vars_.empty() || chance(0.25)) return std::to_string(pick(0, 5));
    const std::string& v =
        loop_vars_[static_cast<std::size_t>(pick(0, static_cast<int>(loop_vars_.size()) - 1))];
    switch (pick(0, 4)) {
      case 0: return v + " + 1";
      case 1: return v + " - 1";
      case 2: return "2 * " + v;
      case 3:
        if (loop_vars_.size() > 1) return loop_vars_[0] + " + " + loop_vars_[1];
        return v;
      default: return v;
    }
  }

  std::string element() {
    const Array& a = arrays_[static_cast<std::size_t>(pick(0, static_cast<int>(arrays_.size()) - 1))];
    std::string s = a.name;
    for (int k = 0; k < a.rank; ++k) s += "[" + subscript() + "]";
    return s;
  }

  std::string leaf() {
    const int r = pick(0, 9);
    if (r <= 2) return std::to_string(pick(0, 9));
    if (r <= 5) return any_scalar();
    if (r <= 6 && !loop_vars_.empty()) return loop_vars_.back();
    if (r <= 8 && !arrays_.empty()) return element();
    if (has_pointer_) return "*p";
    return any_scalar();
  }

  std::string expr(int depth) {
    if (depth >= 2 || chance(0.45)) return leaf();
    const int r = pick(0, 9);
    std::string lhs = expr(depth + 1);
    if (r <= 4) return lhs + " + " + expr(depth + 1);
    if (r <= 7) return lhs + " - " + expr(depth + 1);
    if (r <= 8) return lhs + " * " + leaf();
    int divisor = pick(1, 4);
    if (chance(0.3)) divisor = -divisor;
    return "(" + lhs + ") / " + std::to_string(divisor);
  }

  std::string target() {
    const int r = pick(0, 9);
    if (r <= 1 && !arrays_.empty()) return element();
    if (r == 2 && has_pointer_) return "*p";
    return any_scalar();
  }

  std::string condition() {
    static const char* const kRel[] = {"<", "<=", ">", ">=", "==", "!="};
    return expr(1) + " " + kRel[pick(0, 5)] + " " + expr(1);
  }

  // A statement allowed under an if.
  void simple(int depth, bool in_loop) {
    const int r = pick(0, 9);
    if (in_loop && r == 0) {
      os_ << (chance(0.5) ? "break;" : "continue;") << "\n";
    } else if (r <= 1) {
      os_ << "print " << expr(0) << ";\n";
    } else if (r == 2) {
      os_ << "read " << target() << ";\n";
    } else {
      os_ << target() << " = " << expr(0) << ";\n";
    }
    (void)depth;
  }

  void statement(int depth, bool in_loop) {
    --budget_;
    indent(depth);
    const int r = pick(0, 19);
    if (r <= 2 && depth < opts_.max_loop_depth && budget_ > 1) {
      loop(depth);
    } else if (r <= 5) {
      os_ << "if (" << condition() << ")\n";
      indent(depth + 1);
      simple(depth + 1, in_loop);
    } else if (r == 6 && has_pointer_ && depth == 0) {
      os_ << "p = &" << any_scalar() << ";\n";
    } else if (r == 7) {
      os_ << "read " << target() << ";\n";
    } else if (r == 8) {
      os_ << "print " << expr(0) << ";\n";
    } else {
      os_ << target() << " = " << expr(0) << ";\n";
    }
  }

  void loop(int depth) {
    const std::string v = "i" + std::to_string(depth);
    const int start = pick(0, 2);
    const int trips = pick(0, opts_.max_trip);
    switch (pick(0, 2)) {
      case 0:
        os_ << "for (" << v << " = " << start << "; " << v << " < " << start + trips
            << "; " << v << "++) {\n";
        break;
      case 1:
        os_ << "for (" << v << " = " << start << "; " << v
            << " <= " << start + trips - 1 << "; " << v << " += 1) {\n";
        break;
      default:
        os_ << "for (" << v << " = " << start + trips << "; " << v << " > " << start
            << "; " << v << "--) {\n";
        break;
    }
    loop_vars_.push_back(v);
    const int body = pick(1, 3);
    for (int k = 0; k < body && budget_ > 1; ++k) statement(depth + 1, true);
    loop_vars_.pop_back();
    indent(depth);
    os_ << "}\n";
  }

  std::mt19937_64 rng_;
  GeneratorOptions opts_;
  int budget_;
  std::ostringstream os_;
  std::vector<std::string> scalars_;
  std::vector<Array> arrays_;
  std::vector<std::string> loop_vars_;
  bool has_pointer_ = false;
};

}  // namespace

std::string generate_program(std::uint64_t seed, const GeneratorOptions& opts) {
  return Generator(seed, opts).run();
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) noexcept {
  std::uint64_t z = base + (k + 1) * 0x9e3779b97f4a7c15ull;  // splitmix64
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::int64_t> generate_inputs(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(dist(rng));
  return out;
}

}  // namespace ddi
