#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecrys/letters.hpp"

namespace ecrys {

// A node of a tensor product is a word of letter indices, one per slot.
using Word = std::vector<uint8_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ w.size();
    for (uint8_t x : w) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

// Ordered alphabets of a tensor product, with factor boundaries kept for
// display.  Crystal operators read the leftmost slot first: each slot emits
// φ_i minus signs then ε_i plus signs, adjacent "+-" pairs cancel, f_i acts at
// the rightmost surviving minus and e_i at the leftmost surviving plus.
class Shape {
 public:
  const RootData* rd = nullptr;
  std::vector<const Letters*> slot;
  std::vector<std::pair<int, int>> factors;  // [begin, end) slot ranges

  Shape() = default;
  Shape(const RootData& r, std::vector<const Letters*> slots_one_factor_each)
      : rd(&r) {
    for (const Letters* l : slots_one_factor_each) append_factor({l});
  }

  int nslots() const { return static_cast<int>(slot.size()); }

  void append_factor(const std::vector<const Letters*>& letters) {
    int b = nslots();
    for (const Letters* l : letters) {
      slot.push_back(l);
      if (!rd) rd = l->rd;
    }
    factors.emplace_back(b, nslots());
  }

  Shape concat(const Shape& o) const {
    Shape r = *this;
    if (!r.rd) r.rd = o.rd;
    int off = r.nslots();
    for (const Letters* l : o.slot) r.slot.push_back(l);
    for (auto [b, e] : o.factors) r.factors.emplace_back(b + off, e + off);
    return r;
  }

  Weight weight(const Word& w) const {
    Weight s;
    for (int i = 0; i < nslots(); ++i) s += slot[i]->wt[w[i]];
    return s;
  }

  int phi(const Word& w, int c) const {
    int minus = 0, plus = 0;
    for (int s = 0; s < nslots(); ++s) {
      if (slot[s]->phi(w[s], c)) {
        if (plus > 0)
          --plus;
        else
          ++minus;
      }
      if (slot[s]->eps(w[s], c)) ++plus;
    }
    return minus;
  }

  int eps(const Word& w, int c) const {
    int minus = 0, plus = 0;
    for (int s = 0; s < nslots(); ++s) {
      if (slot[s]->phi(w[s], c)) {
        if (plus > 0)
          --plus;
        else
          ++minus;
      }
      if (slot[s]->eps(w[s], c)) ++plus;
    }
    return plus;
  }

  // f_i: letter-level f at the rightmost surviving minus.  Returns false when
  // undefined.
  bool f(const Word& w, int c, Word& out) const {
    int fpos = -1;
    std::vector<int> plus_stack;  // slot positions of unmatched pluses
    for (int s = 0; s < nslots(); ++s) {
      if (slot[s]->phi(w[s], c)) {
        if (!plus_stack.empty())
          plus_stack.pop_back();
        else
          fpos = s;
      }
      if (slot[s]->eps(w[s], c)) plus_stack.push_back(s);
    }
    if (fpos < 0) return false;
    out = w;
    out[fpos] = static_cast<uint8_t>(slot[fpos]->f(w[fpos], c));
    return true;
  }

  // e_i: letter-level e at the leftmost surviving plus (the bottom of the
  // unmatched-plus stack after the sweep).
  bool e(const Word& w, int c, Word& out) const {
    std::vector<int> plus_stack;
    for (int s = 0; s < nslots(); ++s) {
      if (slot[s]->phi(w[s], c)) {
        if (!plus_stack.empty()) plus_stack.pop_back();
      }
      if (slot[s]->eps(w[s], c)) plus_stack.push_back(s);
    }
    if (plus_stack.empty()) return false;
    int epos = plus_stack.front();
    out = w;
    out[epos] = static_cast<uint8_t>(slot[epos]->e(w[epos], c));
    return true;
  }

  // Sage-style nested display: factors of one letter print as that letter,
  // longer factors as a list of letters; the empty word prints "[]".
  std::string display(const Word& w) const {
    std::string s = "[";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += ", ";
      auto [b, e] = factors[k];
      if (e - b == 1) {
        s += slot[b]->label(w[b]);
      } else {
        s += "[";
        for (int i = b; i < e; ++i) {
          if (i > b) s += ", ";
          s += slot[i]->label(w[i]);
        }
        s += "]";
      }
    }
    return s + "]";
  }
};

}  // namespace ecrys
