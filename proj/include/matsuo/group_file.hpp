#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "matsuo/errors.hpp"
#include "matsuo/permutation.hpp"

namespace matsuo {

/// Parsed contents of a generator file: one permutation in cycle notation
/// per line, '#' starts a comment, blank lines are ignored, and an optional
/// "degree: m" line pins the number of points (otherwise the largest point
/// mentioned decides).  All generators are padded to a common degree.
struct GroupFile {
  int degree = 0;
  std::vector<Permutation> generators;
};

inline GroupFile parse_group_file(std::istream& in) {
  std::vector<std::pair<int, std::string>> perm_lines;  // (line no, text)
  int declared_degree = -1;
  int declared_line = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(begin, end - begin + 1);
    if (body.rfind("degree:", 0) == 0) {
      if (declared_degree >= 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": duplicate degree header (first on line " +
                         std::to_string(declared_line) + ")");
      }
      std::istringstream value(body.substr(7));
      if (!(value >> declared_degree) || declared_degree < 1) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": bad degree header '" + body + "'");
      }
      std::string rest;
      if (value >> rest) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": trailing text after degree header");
      }
      declared_line = line_no;
      continue;
    }
    perm_lines.emplace_back(line_no, std::move(body));
  }
  if (perm_lines.empty()) {
    throw ParseError("no generators in group file");
  }

  GroupFile out;
  int max_degree = declared_degree > 0 ? declared_degree : 1;
  for (const auto& [no, text] : perm_lines) {
    try {
      Permutation p = parse_cycles(text);
      max_degree = std::max(max_degree, p.degree());
      out.generators.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  if (declared_degree > 0 && max_degree > declared_degree) {
    throw ParseError("declared degree " + std::to_string(declared_degree) +
                     " is smaller than a point used in the generators");
  }
  out.degree = max_degree;
  for (auto& g : out.generators) g = g.padded(max_degree);
  return out;
}

inline GroupFile parse_group_file_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group_file(in);
}

}  // namespace matsuo
