// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ddi/analyzer.hpp"
#include "ddi/error.hpp"
#include "ddi/expander.hpp"
#include "ddi/frontend.hpp"
#include "ddi/generator.hpp"
#include "ddi/graph.hpp"
#include "ddi/oracle.hpp"
#include "ddi/transforms.hpp"
#include "json.hpp"

namespace ddi::cli {
namespace {

struct Config {
  std::string input = "-";
  bool json = false;
  bool dot = false;
  bool matrix = false;
  bool closure = false;
  bool dce = false;
  bool cp = false;
  bool ivd = false;
  bool cp_iterate = false;
  std::size_t unroll_cap = kDefaultUnrollCap;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t random = 0;
  std::uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool color_enabled() {
  const char* v = std::getenv("DDI_COLOR");
  return v != nullptr && std::string(v) == "1";
}

std::string paint(const std::string& s, const char* code) {
  if (!color_enabled()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

SourceProgram load(const std::string& path, std::istream& in) {
  SourceProgram src;
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
    src.origin = path;
  }
  src.text = buf.str();
  return src;
}

int cmd_graph(const Config& c, std::istream& in, std::ostream& out) {
  if (int(c.json) + int(c.dot) + int(c.matrix) > 1) {
    throw UsageError("choose at most one of --json, --dot, --matrix");
  }
  const Program p = parse_program(load(c.input, in));
  const DdiGraph g = build_graph(expand_loops(p, c.unroll_cap));
  if (c.json) {
    out << to_json(g);
  } else if (c.dot) {
    out << to_dot(g);
  } else if (c.matrix) {
    out << to_adjacency_matrix(g).to_text();
  } else {
    out << to_text(g);
  }
  return kOk;
}

int cmd_deps(const Config& c, std::istream& in, std::ostream& out) {
  const Program p = parse_program(load(c.input, in));
  const ExpandedProgram xp = expand_loops(p, c.unroll_cap);
  const DdiGraph g = build_graph(xp);
  const auto deps = find_dependences(g);
  const auto report = parallelizability_report(deps, xp.loops);
  std::vector<LabelPair> closure;
  if (c.closure) closure = dependence_closure(g, c.closure_cap);
  if (c.json) {
    out << deps_to_json(deps, report, c.closure ? &closure : nullptr);
    return kOk;
  }
  for (const auto& d : deps) out << format_dependence(d) << "\n";
  for (const auto& l : report.loops) {
    out << "loop " << l.id << " (" << l.var << "): "
        << (l.parallelizable ? paint("parallelizable", "32")
                             : paint("not parallelizable", "31"))
        << "\n";
    for (const auto& d : l.blockers) out << "  blocked by " << format_dependence(d) << "\n";
  }
  if (c.closure) {
    for (const auto& pr : closure) {
      out << "PATH " << pr.first.str() << " ~ " << pr.second.str() << "\n";
    }
  }
  return kOk;
}

void write_list(std::ostream& out, const char* title,
                const std::vector<std::string>& xs) {
  out << "// " << title << ":";
  for (const auto& x : xs) out << ' ' << x;
  out << "\n";
}

int cmd_transform(const Config& c, std::istream& in, std::ostream& out) {
  const bool cp = c.cp || c.cp_iterate;
  if (int(c.dce) + int(cp) + int(c.ivd) != 1) {
    throw UsageError("transform needs exactly one of --dce, --cp, --ivd");
  }
  const Program p = parse_program(load(c.input, in));
  if (c.ivd) {
    const auto rep = detect_induction_variables(build_graph(expand_loops(p, c.unroll_cap)));
    if (c.json) {
      out << rep.to_json();
    } else {
      write_list(out, "basic", rep.induction_basic);
      write_list(out, "refined basic", rep.induction_refined);
      write_list(out, "derived", rep.induction_derived);
      write_list(out, "flagged", rep.flagged);
    }
    return kOk;
  }
  const TransformResult r = c.dce ? eliminate_dead_code(p, c.unroll_cap)
                                  : propagate_constants(p, c.cp_iterate, c.unroll_cap);
  if (c.json) {
    nlohmann::ordered_json j;
    j["source"] = r.source;
    j["report"] = nlohmann::ordered_json::parse(r.report.to_json());
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << r.source;
  if (c.dce) {
    std::vector<std::string> removed;
    for (int k : r.report.removed_instructions) removed.push_back(std::to_string(k));
    write_list(out, "removed instructions", removed);
    write_list(out, "removed variables", r.report.removed_variables);
    std::vector<std::string> inits;
    for (const auto& i : r.report.removed_initializers) {
      inits.push_back(i.variable + "@" + std::to_string(i.instruction));
    }
    write_list(out, "removed initializers", inits);
  } else {
    std::vector<std::string> rewrites;
    for (const auto& w : r.report.rewritten_reads) {
      rewrites.push_back(w.variable + "@" + std::to_string(w.instruction) + "=" +
                         std::to_string(w.constant));
    }
    write_list(out, "rewritten reads", rewrites);
  }
  return kOk;
}

int cmd_verify(const Config& c, std::istream& in, std::ostream& out) {
  if (c.random == 0) {
    const Program p = parse_program(load(c.input, in));
    const Verdict v = verify_equivalence(p, c.unroll_cap);
    if (v.pass) {
      out << paint("PASS", "32") << "\n";
      return kOk;
    }
    out << paint("FAIL", "31") << "\n" << v.diff();
    return kFail;
  }
  std::size_t failures = 0;
  for (std::size_t k = 0; k < c.random; ++k) {
    const std::uint64_t seed = derive_seed(c.seed, k);
    try {
      const Program p = parse_program({generate_program(seed), "<random>"});
      const Verdict v = verify_equivalence(p, c.unroll_cap);
      if (!v.pass) {
        ++failures;
        out << paint("FAIL", "31") << " trial " << k << " (seed " << seed << ")\n"
            << v.diff();
      }
    } catch (const Error& e) {
      ++failures;
      out << paint("FAIL", "31") << " trial " << k << " (seed " << seed
          << "): " << e.what() << "\n";
    }
  }
  if (failures == 0) {
    out << paint("PASS", "32") << " " << c.random << "/" << c.random
        << " random programs\n";
    return kOk;
  }
  out << paint("FAIL", "31") << " " << failures << "/" << c.random
      << " random programs\n";
  return kFail;
}

int cmd_fmt(const Config& c, std::istream& in, std::ostream& out) {
  out << pretty_print(parse_program(load(c.input, in)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Data dependence identifier for a small imperative language", "ddi"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--unroll-cap", c.unroll_cap, "Maximum loop instances")
      ->check(CLI::PositiveNumber);
  app.add_option("--closure-cap", c.closure_cap, "Maximum closure pairs")
      ->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "Print the dependence graph");
  auto* deps = app.add_subcommand("deps", "List dependences and loop verdicts");
  auto* transform = app.add_subcommand("transform", "Run DCE, CP or IVD");
  auto* verify = app.add_subcommand("verify", "Check the analyzer against the oracle");
  auto* fmt = app.add_subcommand("fmt", "Print the program in canonical form");
  for (auto* sub : {graph, deps, transform, verify, fmt}) {
    sub->fallthrough();
    sub->add_option("input", c.input, "Source file, or - for stdin");
  }
  graph->add_flag("--json", c.json, "JSON output");
  graph->add_flag("--dot", c.dot, "Graphviz output");
  graph->add_flag("--matrix", c.matrix, "Adjacency matrix");
  deps->add_flag("--json", c.json, "JSON output");
  deps->add_flag("--closure", c.closure, "Also list path-closure pairs");
  transform->add_flag("--dce", c.dce, "Dead code elimination");
  transform->add_flag("--cp", c.cp, "Constant propagation");
  transform->add_flag("--cp-iterate", c.cp_iterate, "Constant propagation to a fixpoint");
  transform->add_flag("--ivd", c.ivd, "Induction variable detection");
  transform->add_flag("--json", c.json, "JSON output");
  verify->add_option("--random", c.random, "Number of generated programs");
  verify->add_option("--seed", c.seed, "Seed of the first generated program");

  std::vector<std::string> argv_store{"ddi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (graph->parsed()) return cmd_graph(c, in, out);
    if (deps->parsed()) return cmd_deps(c, in, out);
    if (transform->parsed()) return cmd_transform(c, in, out);
    if (verify->parsed()) return cmd_verify(c, in, out);
    return cmd_fmt(c, in, out);
  } catch (const UsageError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << paint("error", "31") << ": " << e.what() << "\n";
    return kError;
  }
}

}  // namespace ddi::cli
