#pragma once

// Printed generating functions stored as text under tests/fixtures/gf,
// named T<n>_s<s>.txt and T<n>_s<s>_rowsum.txt.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tilings/poly.hpp"

#ifndef TILINGS_FIXTURE_DIR
#error "TILINGS_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace fixtures {

inline std::string read_text(const std::string& relative) {
  std::ifstream in(std::string(TILINGS_FIXTURE_DIR) + "/" + relative);
  if (!in) throw std::runtime_error("missing fixture " + relative);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline tilings::RatFun printed_gf(int s, int n, bool row_sums = false) {
  return tilings::RatFun::parse(read_text("gf/T" + std::to_string(n) + "_s" + std::to_string(s) +
                                          (row_sums ? "_rowsum" : "") + ".txt"));
}

}  // namespace fixtures
