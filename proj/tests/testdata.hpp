#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

inline std::string slurp_data(const std::string& name) {
  std::ifstream in(std::string(KNOTKIT_DATA_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing data file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
