#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecrys/weight.hpp"

namespace ecrys {

// Colored-graph document: nodes are weights in signed-index form, arrows are
// (src, dst, color).  This is the on-disk fixture format:
//   # comment lines
//   -0,1                 nodes, one signed weight per line
//   -0,1 -> -1,3 : 1     arrows
struct GraphDoc {
  std::vector<Weight> nodes;
  struct Arrow {
    Weight src, dst;
    int color;
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
  };
  std::vector<Arrow> arrows;

  // Sort nodes and arrows into the canonical emitted order.
  void canonicalize() {
    std::sort(nodes.begin(), nodes.end());
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
      if (a.color != b.color) return a.color < b.color;
      if (a.src != b.src) return a.src < b.src;
      return a.dst < b.dst;
    });
  }
};

// Parse "-0,-4,2,5" (negatives then positives, affine labels).
inline Weight parse_signed_weight(const std::string& s) {
  Weight w;
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad signed weight: " + s);
    int label = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
      label = label * 10 + (s[i++] - '0');
    if (label > 7) throw std::invalid_argument("bad label in: " + s);
    w[label] += neg ? -1 : 1;
    if (i < s.size()) {
      if (s[i] != ',') throw std::invalid_argument("bad separator in: " + s);
      ++i;
    }
  }
  return w;
}

inline GraphDoc parse_graph_doc(std::istream& in) {
  GraphDoc doc;
  std::string line;
  while (std::getline(in, line)) {
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.empty() || line[0] == '#') continue;
    auto arr = line.find("->");
    if (arr == std::string::npos) {
      doc.nodes.push_back(parse_signed_weight(line));
    } else {
      auto col = line.find(':', arr);
      if (col == std::string::npos)
        throw std::invalid_argument("arrow line without color: " + line);
      auto strip = [](std::string t) {
        auto sb = t.find_first_not_of(" \t");
        auto se = t.find_last_not_of(" \t");
        return sb == std::string::npos ? std::string() : t.substr(sb, se - sb + 1);
      };
      GraphDoc::Arrow a;
      a.src = parse_signed_weight(strip(line.substr(0, arr)));
      a.dst = parse_signed_weight(strip(line.substr(arr + 2, col - arr - 2)));
      a.color = std::stoi(strip(line.substr(col + 1)));
      doc.arrows.push_back(a);
    }
  }
  return doc;
}

inline GraphDoc load_graph_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph_doc(in);
}

inline std::string emit_graph_doc(GraphDoc doc, const std::string& header = "") {
  doc.canonicalize();
  std::ostringstream out;
  if (!header.empty()) out << "# " << header << "\n";
  for (const auto& n : doc.nodes) out << n.signed_str() << "\n";
  for (const auto& a : doc.arrows)
    out << a.src.signed_str() << " -> " << a.dst.signed_str() << " : " << a.color
        << "\n";
  return out.str();
}

}  // namespace ecrys
