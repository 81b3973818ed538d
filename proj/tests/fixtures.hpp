#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "lasg/cayley_io.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(LASG_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 6 elements, left identity e, not intra-regular.
inline lasg::Magma example_exp() {
  return lasg::parse_cayley(read_fixture("exp.tbl"));
}

// 5 elements, left identity b, intra-regular.
inline lasg::Magma example_tb() {
  return lasg::parse_cayley(read_fixture("tb.tbl"));
}

inline lasg::ElemSet labels(const lasg::Magma& m, std::string_view names) {
  lasg::ElemSet out = m.empty_set();
  for (char c : names) {
    if (c == ',' || c == ' ') continue;
    out.insert(*m.find_label(std::string(1, c)));
  }
  return out;
}

inline lasg::ElemId id(const lasg::Magma& m, std::string_view name) {
  return *m.find_label(name);
}

}  // namespace testing
