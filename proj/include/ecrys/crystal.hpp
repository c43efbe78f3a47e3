#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecrys/tensor.hpp"

namespace ecrys {

// A crystal graph generated by BFS from seed words, one component per seed.
// Arrows are stored per color; color 0 stays empty until an affine structure
// fills it in.  Node ids are contiguous and deterministic: components in
// insertion order, nodes in BFS order with colors ascending.
class CrystalGraph {
 public:
  const RootData* rd = nullptr;
  std::vector<Shape> shapes;  // per component
  std::vector<int32_t> comp_of;
  std::vector<Word> word_of;
  std::vector<Weight> node_wt;
  std::vector<std::array<int32_t, 8>> farr, earr;

  explicit CrystalGraph(const RootData& r) : rd(&r) {}

  int size() const { return static_cast<int>(comp_of.size()); }
  int ncomps() const { return static_cast<int>(shapes.size()); }

  // Generates the f-closure of `seed`, which must be new.  Returns the
  // component index.
  int add_component(Shape sh, const Word& seed) {
    int comp = ncomps();
    shapes.push_back(std::move(sh));
    const Shape& s = shapes.back();
    auto& idx = index_.emplace_back();
    int first = size();
    idx.emplace(seed, first);
    push_node(comp, seed, s.weight(seed));
    for (int qi = first; qi < size(); ++qi) {
      Word w = word_of[qi];  // copy: word_of may reallocate below
      for (int c = 1; c <= rd->rank; ++c) {
        Word out;
        if (!s.f(w, c, out)) continue;
        auto [it, fresh] = idx.try_emplace(out, size());
        if (fresh) push_node(comp, out, node_wt[qi] - rd->simple_root(c));
        farr[qi][c] = it->second;
        earr[it->second][c] = qi;
      }
    }
    return comp;
  }

  int f(int v, int c) const { return farr[v][c]; }
  int e(int v, int c) const { return earr[v][c]; }

  int phi(int v, int c) const {
    int n = 0;
    while ((v = farr[v][c]) >= 0) ++n;
    return n;
  }
  int eps(int v, int c) const {
    int n = 0;
    while ((v = earr[v][c]) >= 0) ++n;
    return n;
  }

  const Weight& weight(int v) const { return node_wt[v]; }

  // True when ε_c(v) = 0 for every color in `colors`.
  bool is_hw(int v, const std::vector<int>& colors) const {
    for (int c : colors)
      if (earr[v][c] >= 0) return false;
    return true;
  }

  int node_id(int comp, const Word& w) const {
    auto it = index_[comp].find(w);
    return it == index_[comp].end() ? -1 : it->second;
  }

  std::string label(int v) const {
    return shapes[comp_of[v]].display(word_of[v]);
  }

  int component_size(int comp) const {
    return static_cast<int>(index_[comp].size());
  }

 private:
  std::vector<std::unordered_map<Word, int32_t, WordHash>> index_;

  void push_node(int comp, const Word& w, const Weight& wt) {
    comp_of.push_back(comp);
    word_of.push_back(w);
    node_wt.push_back(wt);
    std::array<int32_t, 8> none;
    none.fill(-1);
    farr.push_back(none);
    earr.push_back(none);
  }
};

}  // namespace ecrys
