#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <unordered_set>

#include "ecrys/crystal.hpp"
#include "ecrys/fixture.hpp"

namespace ecrys {

// Letter-word realization of one fundamental highest-weight crystal: the slot
// alphabets together with the seed word generating B(Λ_i).
struct FundFactor {
  std::vector<const Letters*> slots;
  Word hw;
};

namespace detail {

inline FundFactor make_factor(std::vector<const Letters*> slots,
                              std::vector<const char*> seed) {
  FundFactor f{std::move(slots), {}};
  for (std::size_t i = 0; i < seed.size(); ++i)
    f.hw.push_back(
        static_cast<uint8_t>(f.slots[i]->index_of(parse_signed_weight(seed[i]))));
  return f;
}

}  // namespace detail

inline const FundFactor& fund_factor(const RootData& rd, int i) {
  static const std::array<FundFactor, 7> e6 = [] {
    const Letters* L1 = &Letters::e6_L1();
    const Letters* L6 = &Letters::e6_L6();
    return std::array<FundFactor, 7>{
        FundFactor{},
        detail::make_factor({L1}, {"-0,1"}),
        detail::make_factor({L6, L1}, {"-0,-1,2", "-0,1"}),
        detail::make_factor({L1, L1}, {"-0,-1,3", "-0,1"}),
        detail::make_factor({L1, L1, L1}, {"-0,-3,4", "-0,-1,3", "-0,1"}),
        detail::make_factor({L6, L6}, {"-0,-6,5", "-0,6"}),
        detail::make_factor({L6}, {"-0,6"}),
    };
  }();
  static const std::array<FundFactor, 8> e7 = [] {
    const Letters* L7 = &Letters::e7_L7();
    return std::array<FundFactor, 8>{
        FundFactor{},
        detail::make_factor({L7, L7}, {"-0,-7,1", "-0,7"}),
        detail::make_factor({L7, L7, L7}, {"-1,2", "-0,-7,1", "-0,7"}),
        detail::make_factor({L7, L7, L7, L7},
                            {"-0,-2,3", "-1,2", "-0,-7,1", "-0,7"}),
        detail::make_factor({L7, L7, L7, L7},
                            {"-0,-5,4", "-0,-6,5", "-0,-7,6", "-0,7"}),
        detail::make_factor({L7, L7, L7}, {"-0,-6,5", "-0,-7,6", "-0,7"}),
        detail::make_factor({L7, L7}, {"-0,-7,6", "-0,7"}),
        detail::make_factor({L7}, {"-0,7"}),
    };
  }();
  if (rd.rank == 6) return e6[i];
  if (rd.rank == 7) return e7[i];
  throw std::runtime_error("fund_factor: unsupported root datum");
}

// Shape and seed word for B(λ): fundamental factors by ascending index with
// multiplicity.  λ is read classically (coordinate 0 is ignored).
inline std::pair<Shape, Word> realization(const RootData& rd,
                                          const Weight& lambda) {
  Shape sh;
  sh.rd = &rd;
  Word seed;
  for (int i = 1; i <= rd.rank; ++i) {
    if (lambda[i] < 0) throw std::runtime_error("realization: non-dominant weight");
    const FundFactor& f = fund_factor(rd, i);
    for (int m = 0; m < lambda[i]; ++m) {
      sh.append_factor(f.slots);
      seed.insert(seed.end(), f.hw.begin(), f.hw.end());
    }
  }
  return {std::move(sh), std::move(seed)};
}

inline std::vector<int> classical_colors(const RootData& rd) {
  std::vector<int> v;
  for (int c = 1; c <= rd.rank; ++c) v.push_back(c);
  return v;
}

// B(λ) as a one-component crystal graph.
inline CrystalGraph gen_classical(const RootData& rd, const Weight& lambda) {
  CrystalGraph g(rd);
  auto [sh, seed] = realization(rd, lambda);
  g.add_component(std::move(sh), seed);
  if (!g.is_hw(0, classical_colors(rd)))
    throw std::runtime_error("gen_classical: seed is not highest weight");
  return g;
}

// ⊕_j B(λ_j), one component per summand in the given order.
inline CrystalGraph gen_direct_sum(const RootData& rd,
                                   const std::vector<Weight>& lambdas) {
  CrystalGraph g(rd);
  for (const Weight& l : lambdas) {
    auto [sh, seed] = realization(rd, l);
    int comp = g.add_component(std::move(sh), seed);
    (void)comp;
  }
  return g;
}

// Nodes v with ε_c(v) = 0 for all c in `colors`, ascending by id.
inline std::vector<int> hw_nodes(const CrystalGraph& g,
                                 const std::vector<int>& colors) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.is_hw(v, colors)) out.push_back(v);
  return out;
}

// Membership table for the component of hw ⊗ hw inside A ⊗ B: the pair
// (x, y) stands for the two-slot word x ⊗ y.
class PairOracle {
 public:
  const Letters* A;
  const Letters* B;

  bool pwi(int x, int y) const { return in_[x * B->size() + y]; }

  static const PairOracle& get(const Letters& A, const Letters& B) {
    static std::map<std::pair<const Letters*, const Letters*>,
                    std::unique_ptr<PairOracle>>
        cache;
    auto key = std::make_pair(&A, &B);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, std::unique_ptr<PairOracle>(new PairOracle(A, B)))
               .first;
    }
    return *it->second;
  }

 private:
  std::vector<bool> in_;

  PairOracle(const Letters& a, const Letters& b) : A(&a), B(&b) {
    in_.assign(static_cast<std::size_t>(A->size()) * B->size(), false);
    CrystalGraph g(*A->rd);
    Shape sh(*A->rd, {A, B});
    Word seed{static_cast<uint8_t>(hw_letter(*A)),
              static_cast<uint8_t>(hw_letter(*B))};
    g.add_component(std::move(sh), seed);
    for (int v = 0; v < g.size(); ++v) {
      const Word& w = g.word_of[v];
      in_[w[0] * B->size() + w[1]] = true;
    }
  }

 public:
  // The unique letter with ε_c = 0 for every classical color.
  static int hw_letter(const Letters& L) {
    int found = -1;
    for (int b = 0; b < L.size(); ++b) {
      bool hw = true;
      for (int c = 1; c <= L.rd->rank && hw; ++c)
        if (L.eps(b, c)) hw = false;
      if (hw) {
        if (found >= 0) throw std::runtime_error("hw_letter: not unique");
        found = b;
      }
    }
    if (found < 0) throw std::runtime_error("hw_letter: none");
    return found;
  }
};

// A word is pairwise weakly increasing when every adjacent two-slot pair lies
// in the leading component of its alphabets.
inline bool pwi_word(const Shape& sh, const Word& w) {
  for (int j = 0; j + 1 < sh.nslots(); ++j)
    if (!PairOracle::get(*sh.slot[j], *sh.slot[j + 1]).pwi(w[j], w[j + 1]))
      return false;
  return true;
}

// Fast test for a doubled minuscule alphabet: x ⊗ y lies in the leading
// component iff y is f-reachable from x (reflexively).
inline bool leading_pair_minuscule(const Letters& L, int x, int y) {
  return L.reaches(x, y);
}

// Membership table for the component of hw ⊗ hw inside B(Λ_iA) ⊗ B(Λ_iB),
// with each factor given as its letter word.
class FactorPairOracle {
 public:
  static const FactorPairOracle& get(const RootData& rd, int iA, int iB) {
    static std::map<std::tuple<const RootData*, int, int>,
                    std::unique_ptr<FactorPairOracle>>
        cache;
    auto key = std::make_tuple(&rd, iA, iB);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache
               .emplace(key, std::unique_ptr<FactorPairOracle>(
                                 new FactorPairOracle(rd, iA, iB)))
               .first;
    return *it->second;
  }

  bool pwi(const Word& wa, const Word& wb) const {
    Word w = wa;
    w.insert(w.end(), wb.begin(), wb.end());
    return in_.count(w) > 0;
  }

 private:
  std::unordered_set<Word, WordHash> in_;

  FactorPairOracle(const RootData& rd, int iA, int iB) {
    const FundFactor& fa = fund_factor(rd, iA);
    const FundFactor& fb = fund_factor(rd, iB);
    Shape sh;
    sh.rd = &rd;
    sh.append_factor(fa.slots);
    sh.append_factor(fb.slots);
    Word seed = fa.hw;
    seed.insert(seed.end(), fb.hw.begin(), fb.hw.end());
    CrystalGraph g(rd);
    g.add_component(std::move(sh), seed);
    for (int v = 0; v < g.size(); ++v) in_.insert(g.word_of[v]);
  }
};

// Fast test for the doubled adjoint crystal of E6 realized inside
// (B(Λ6) ⊗ B(Λ1))^⊗2.  For two nodes b1 ⊗ c1 and b2 ⊗ c2 of the adjoint
// crystal, their tensor product lies in the leading component iff
//   (1) b2 is reachable from b1 and c2 is reachable from c1, and
//   (2) whenever wt(c1) = −wt(b2), the two nodes are joined by an f-path of
//       length at least one.
// Letter pairs that are not adjoint-crystal nodes never qualify.
class AdjointPairFast {
 public:
  static const AdjointPairFast& get() {
    static AdjointPairFast inst;
    return inst;
  }

  bool pwi(int b1, int c1, int b2, int c2) const {
    if (node_of(b1, c1) < 0 || node_of(b2, c2) < 0) return false;
    const Letters& L6 = Letters::e6_L6();
    const Letters& L1 = Letters::e6_L1();
    if (!L6.reaches(b1, b2) || !L1.reaches(c1, c2)) return false;
    if (L1.wt[c1] == -L6.wt[b2]) {
      int u = node_of(b1, c1), v = node_of(b2, c2);
      if (!strict_reach_[u * n_ + v]) return false;
    }
    return true;
  }

 private:
  CrystalGraph g_;
  int n_;
  std::vector<int> node_;  // 27*27 → adjoint node id or -1
  std::vector<bool> strict_reach_;

  int node_of(int b, int c) const { return node_[b * 27 + c]; }

  AdjointPairFast()
      : g_(gen_classical(RootData::e6(), Weight{{0, 0, 1, 0, 0, 0, 0, 0}})) {
    n_ = g_.size();
    node_.assign(27 * 27, -1);
    for (int v = 0; v < n_; ++v)
      node_[g_.word_of[v][0] * 27 + g_.word_of[v][1]] = v;
    // strict reachability: at least one arrow
    strict_reach_.assign(static_cast<std::size_t>(n_) * n_, false);
    for (int s = 0; s < n_; ++s) {
      std::vector<int> stack;
      for (int c = 1; c <= 6; ++c)
        if (g_.farr[s][c] >= 0) stack.push_back(g_.farr[s][c]);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (strict_reach_[s * n_ + v]) continue;
        strict_reach_[s * n_ + v] = true;
        for (int c = 1; c <= 6; ++c)
          if (g_.farr[v][c] >= 0) stack.push_back(g_.farr[v][c]);
      }
    }
  }
};

}  // namespace ecrys
