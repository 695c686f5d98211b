// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ddi/frontend.hpp"

namespace ddi::test {

inline std::string sample_path(const std::string& name) {
  return std::string(DDI_SAMPLES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline Program parse(const std::string& text) {
  return parse_program({text, "<test>"});
}

inline Program load_sample(const std::string& name) {
  return parse_program({read_file(sample_path(name)), name});
}

}  // namespace ddi::test
