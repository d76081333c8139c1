#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "stralg/parser.hpp"

#ifndef STRALG_FIXTURE_DIR
#define STRALG_FIXTURE_DIR "tests/fixtures"
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(STRALG_FIXTURE_DIR) + "/" + name + ".dsl";
}

inline stralg::Presentation fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw stralg::Error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return stralg::parse_presentation(ss.str());
}

// shorthands used across the suite
inline stralg::Presentation eight_cycle() { return fixture("eight_cycle_tails"); }
inline stralg::Presentation triangle_quartic() { return fixture("triangle_quartic"); }
inline stralg::Presentation triangle_radsq() { return fixture("triangle_radsq"); }
inline stralg::Presentation a2() { return fixture("a2"); }
inline stralg::Presentation kronecker() { return fixture("kronecker"); }
inline stralg::Presentation line_two_rels() { return fixture("line_two_rels"); }
inline stralg::Presentation triangle_kronecker() { return fixture("triangle_kronecker"); }

inline stralg::Path path_of(const stralg::Presentation& p, const std::string& dotted) {
  std::vector<int> arrows;
  size_t start = 0;
  while (start <= dotted.size()) {
    size_t dot = dotted.find('.', start);
    std::string name = dotted.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    arrows.push_back(p.quiver.arrow_index(name));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return stralg::make_path(p.quiver, arrows);
}

inline std::string fmt(const stralg::Presentation& p, const stralg::Path& x) {
  return stralg::format_path(p.quiver, x);
}

}  // namespace testsupport
