#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecrys/compgraph.hpp"
#include "ecrys/fixture.hpp"

namespace ecrys {

// ---------------------------------------------------------------------------
// Full graph documents: the JSON/DOT export format.  Node ids are the
// generation order (consecutive from 0); letters are the per-slot signed
// classical-index lists in display order, leftmost tensor factor first; the
// weight vector lists the affine indices 0..rank.

struct Document {
  std::string kind;  // "classical" | "affine" | "compgraph"
  int rank = 0;
  std::vector<int> index_set;
  int r = -1, s = -1;             // columns, affine kind only
  int fund = -1;                  // compgraph kind only
  std::vector<int> J;             //   "
  bool level0 = false;            //   "

  struct Node {
    std::string label;
    std::vector<std::vector<int>> letters;
    std::vector<int> weight;
    int component = 0;
    bool loop = false;
    friend bool operator==(const Node&, const Node&) = default;
  };
  struct Edge {
    int src = 0, dst = 0, color = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  friend bool operator==(const Document&, const Document&) = default;
};

inline Document document_from_graph(const CrystalGraph& g, bool affine,
                                    int r = -1, int s = -1) {
  Document d;
  d.kind = affine ? "affine" : "classical";
  d.rank = g.rd->rank;
  for (int c = affine ? 0 : 1; c <= d.rank; ++c) d.index_set.push_back(c);
  if (affine) {
    d.r = r;
    d.s = s;
  }
  for (int v = 0; v < g.size(); ++v) {
    Document::Node n;
    n.label = g.label(v);
    const Shape& sh = g.shapes[g.comp_of[v]];
    const Word& w = g.word_of[v];
    for (int i = 0; i < sh.nslots(); ++i)
      n.letters.push_back(sh.slot[i]->signed_label(w[i]));
    for (int c = 0; c <= d.rank; ++c) n.weight.push_back(g.weight(v)[c]);
    n.component = g.comp_of[v];
    d.nodes.push_back(std::move(n));
  }
  for (int v = 0; v < g.size(); ++v)
    for (int c : d.index_set)
      if (g.f(v, c) >= 0) d.edges.push_back({v, g.f(v, c), c});
  return d;
}

inline Document document_from_compgraph(const CompGraph& cg) {
  Document d;
  d.kind = "compgraph";
  d.rank = cg.rd->rank;
  for (int c = 1; c <= d.rank; ++c) d.index_set.push_back(c);
  d.fund = cg.fund;
  d.J = cg.J;
  d.level0 = cg.level0;
  for (int i = 0; i < cg.nv(); ++i) {
    int v = cg.verts[i];
    Document::Node n;
    n.label = cg.base.label(v);
    const Shape& sh = cg.base.shapes[0];
    const Word& w = cg.base.word_of[v];
    for (int b = 0; b < sh.nslots(); ++b)
      n.letters.push_back(sh.slot[b]->signed_label(w[b]));
    for (int c = 0; c <= d.rank; ++c) n.weight.push_back(cg.base.weight(v)[c]);
    n.loop = cg.loop(i);
    d.nodes.push_back(std::move(n));
  }
  for (auto [i, j] : cg.reduced) d.edges.push_back({i, j, 0});
  return d;
}

inline nlohmann::ordered_json to_json(const Document& d) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json h;
  h["kind"] = d.kind;
  h["rank"] = d.rank;
  h["index_set"] = d.index_set;
  if (d.kind == "affine") {
    h["r"] = d.r;
    h["s"] = d.s;
  }
  if (d.kind == "compgraph") {
    h["fund"] = d.fund;
    h["J"] = d.J;
    h["level0"] = d.level0;
  }
  h["convention"] = "leftmost tensor factor first";
  j["header"] = std::move(h);
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Document::Node& n = d.nodes[i];
    nlohmann::ordered_json jn;
    jn["id"] = i;
    jn["label"] = n.label;
    jn["letters"] = n.letters;
    jn["weight"] = n.weight;
    jn["component"] = n.component;
    if (d.kind == "compgraph") jn["loop"] = n.loop;
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Document::Edge& e : d.edges)
    j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"color", e.color}});
  return j;
}

inline std::string json_str(const Document& d) { return to_json(d).dump(2) + "\n"; }

inline Document document_from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  Document d;
  const auto& h = j.at("header");
  d.kind = h.at("kind").get<std::string>();
  d.rank = h.at("rank").get<int>();
  d.index_set = h.at("index_set").get<std::vector<int>>();
  if (d.kind == "affine") {
    d.r = h.at("r").get<int>();
    d.s = h.at("s").get<int>();
  }
  if (d.kind == "compgraph") {
    d.fund = h.at("fund").get<int>();
    d.J = h.at("J").get<std::vector<int>>();
    d.level0 = h.at("level0").get<bool>();
  }
  for (const auto& jn : j.at("nodes")) {
    if (jn.at("id").get<int>() != static_cast<int>(d.nodes.size()))
      throw std::runtime_error("document: node ids must be consecutive");
    Document::Node n;
    n.label = jn.at("label").get<std::string>();
    n.letters = jn.at("letters").get<std::vector<std::vector<int>>>();
    n.weight = jn.at("weight").get<std::vector<int>>();
    if (n.weight.size() != static_cast<std::size_t>(d.rank) + 1)
      throw std::runtime_error("document: weight vector has wrong length");
    n.component = jn.at("component").get<int>();
    if (d.kind == "compgraph") n.loop = jn.at("loop").get<bool>();
    d.nodes.push_back(std::move(n));
  }
  const int nn = static_cast<int>(d.nodes.size());
  for (const auto& je : j.at("edges")) {
    Document::Edge e{je.at("src").get<int>(), je.at("dst").get<int>(),
                     je.at("color").get<int>()};
    if (e.src < 0 || e.src >= nn || e.dst < 0 || e.dst >= nn)
      throw std::runtime_error("document: edge endpoint out of range");
    d.edges.push_back(e);
  }
  return d;
}

// DOT with one line per node and per edge; a loop flag renders as a doubled
// node outline, edge colors as the `label` attribute.
inline std::string to_dot(const Document& d) {
  auto esc = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '"' || c == '\\') o += '\\';
      o += c;
    }
    return o;
  };
  std::ostringstream o;
  o << "digraph \"" << esc(d.kind) << "\" {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    o << "  " << i << " [label=\"" << esc(d.nodes[i].label) << "\"";
    if (d.nodes[i].loop) o << ", peripheries=2";
    o << "];\n";
  }
  for (const Document::Edge& e : d.edges)
    o << "  " << e.src << " -> " << e.dst << " [label=" << e.color << "];\n";
  o << "}\n";
  return o.str();
}

}  // namespace ecrys
