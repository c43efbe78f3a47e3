#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecrys/rootdata.hpp"

namespace ecrys {

// Crystal of a minuscule representation, generated as the Weyl orbit of a
// fundamental weight.  Every i-string has length at most one, so
// φ_i(b) = [wt_i(b) = 1] and ε_i(b) = [wt_i(b) = −1].  A dual alphabet keeps
// the index space of its primal, negates weights, and swaps e with f.
class Letters {
 public:
  const RootData* rd = nullptr;
  int fund = 0;                  // generating fundamental of the primal orbit
  bool dualized = false;
  const Letters* primal = nullptr;  // set on duals, for display delegation
  std::vector<Weight> wt;           // level-zero affine weights
  std::vector<std::array<int16_t, 8>> fnext, eprev;  // arrows per color; -1 = none

  static const Letters& e6_L1() {
    static const Letters l = make_orbit(RootData::e6(), 1);
    return l;
  }
  static const Letters& e6_L6() {
    static const Letters l = make_dual(e6_L1());
    return l;
  }
  static const Letters& e7_L7() {
    static const Letters l = make_orbit(RootData::e7(), 7);
    return l;
  }

  int size() const { return static_cast<int>(wt.size()); }
  int f(int b, int c) const { return fnext[b][c]; }
  int e(int b, int c) const { return eprev[b][c]; }
  int phi(int b, int c) const { return wt[b][c] == 1 ? 1 : 0; }
  int eps(int b, int c) const { return wt[b][c] == -1 ? 1 : 0; }

  int index_of(const Weight& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }

  // Reflexive f-reachability over all classical colors.
  bool reaches(int from, int to) const { return reach_[from][to]; }

  // Classical signed entries in display order: primal letters list barred
  // (negative) classical labels ascending then unbarred ascending; a dual
  // letter negates its primal's entries in place.
  std::vector<int> signed_label(int b) const {
    if (dualized) {
      auto v = primal->signed_label(b);
      for (int& x : v) x = -x;
      return v;
    }
    std::vector<int> v;
    for (int i = 1; i <= rd->rank; ++i)
      if (wt[b][i] < 0) v.push_back(-i);
    for (int i = 1; i <= rd->rank; ++i)
      if (wt[b][i] > 0) v.push_back(i);
    return v;
  }

  std::string label(int b) const {
    auto v = signed_label(b);
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(v[i]);
    }
    return s + "]";
  }

  static Letters make_orbit(const RootData& rd, int fund) {
    Letters l;
    l.rd = &rd;
    l.fund = fund;
    Weight hw;
    hw[fund] = 1;
    hw = rd.with_level0(hw);
    l.wt.push_back(hw);
    l.index_[hw] = 0;
    for (std::size_t q = 0; q < l.wt.size(); ++q) {
      l.fnext.push_back({-1, -1, -1, -1, -1, -1, -1, -1});
      for (int c = 1; c <= rd.rank; ++c) {
        Weight w = l.wt[q];  // wt may reallocate during push_back below
        if (w[c] != 1) continue;
        Weight t = w - rd.simple_root(c);
        auto it = l.index_.find(t);
        int id;
        if (it == l.index_.end()) {
          id = static_cast<int>(l.wt.size());
          l.wt.push_back(t);
          l.index_[t] = id;
        } else {
          id = it->second;
        }
        l.fnext.back()[c] = static_cast<int16_t>(id);
      }
    }
    l.eprev.assign(l.wt.size(), {-1, -1, -1, -1, -1, -1, -1, -1});
    for (int b = 0; b < l.size(); ++b)
      for (int c = 1; c <= rd.rank; ++c)
        if (l.fnext[b][c] >= 0) l.eprev[l.fnext[b][c]][c] = static_cast<int16_t>(b);
    for (int b = 0; b < l.size(); ++b)
      for (int c = 1; c <= rd.rank; ++c) {
        bool has_f = l.fnext[b][c] >= 0, has_e = l.eprev[b][c] >= 0;
        if (has_f != (l.wt[b][c] == 1) || has_e != (l.wt[b][c] == -1))
          throw std::logic_error("letters: orbit is not minuscule");
      }
    l.close_reach();
    return l;
  }

  static Letters make_dual(const Letters& p) {
    Letters l;
    l.rd = p.rd;
    l.fund = p.fund;
    l.dualized = true;
    l.primal = &p;
    l.wt.resize(p.wt.size());
    for (int b = 0; b < p.size(); ++b) l.wt[b] = -p.wt[b];
    l.fnext = p.eprev;
    l.eprev = p.fnext;
    for (int b = 0; b < l.size(); ++b) l.index_[l.wt[b]] = b;
    l.close_reach();
    return l;
  }

 private:
  std::unordered_map<Weight, int, WeightHash> index_;
  std::vector<std::vector<bool>> reach_;

  void close_reach() {
    int n = size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (int b = 0; b < n; ++b) {
      // DFS over f-arrows
      std::vector<int> stack = {b};
      reach_[b][b] = true;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int c = 1; c <= rd->rank; ++c) {
          int y = fnext[x][c];
          if (y >= 0 && !reach_[b][y]) {
            reach_[b][y] = true;
            stack.push_back(y);
          }
        }
      }
    }
  }
};

}  // namespace ecrys
