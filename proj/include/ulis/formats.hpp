#pragma once

#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulis/enumerate.hpp"
#include "ulis/numeric.hpp"

namespace ulis {

// Rendering is bytes-stable: identical tables produce identical output, with
// LF line endings and a trailing newline everywhere.

inline std::string render_table(const CountTable& t) {
  std::string out = "     n  count\n";
  for (const auto& [n, c] : t.rows) {
    char head[32];
    std::snprintf(head, sizeof head, "%6d  ", n);
    out += head;
    out += c.str();
    out += '\n';
  }
  return out;
}

inline std::string render_csv(const CountTable& t) {
  std::string out = "n,count\n";
  for (const auto& [n, c] : t.rows) {
    out += std::to_string(n);
    out += ',';
    out += c.str();
    out += '\n';
  }
  return out;
}

/// OEIS b-file lines: "n a(n)", single space, decimal counts.
inline std::string render_bfile(const CountTable& t) {
  std::string out;
  for (const auto& [n, c] : t.rows) {
    out += std::to_string(n);
    out += ' ';
    out += c.str();
    out += '\n';
  }
  return out;
}

/// Counts are rendered as decimal strings so arbitrary-precision values
/// survive every JSON consumer.
inline std::string render_json(const CountTable& t, const nlohmann::json& config) {
  nlohmann::json doc;
  doc["config"] = config;
  doc["method"] = to_string(t.method);
  doc["rows"] = nlohmann::json::array();
  for (const auto& [n, c] : t.rows) {
    doc["rows"].push_back({{"n", n}, {"count", c.str()}});
  }
  return doc.dump(2) + "\n";
}

/// Reads "n a(n)" lines; '#' lines and blank lines are skipped, as in
/// published b-files.
inline std::vector<std::pair<int, Integer>> parse_bfile(std::istream& in) {
  std::vector<std::pair<int, Integer>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n = 0;
    std::string count;
    if (!(ls >> n >> count) || count.empty()) {
      throw std::invalid_argument("b-file: cannot parse line \"" + line + "\"");
    }
    for (std::size_t i = count[0] == '-' ? 1 : 0; i < count.size(); ++i) {
      if (count[i] < '0' || count[i] > '9') {
        throw std::invalid_argument("b-file: cannot parse line \"" + line + "\"");
      }
    }
    rows.emplace_back(n, Integer(count));
  }
  return rows;
}

}  // namespace ulis
