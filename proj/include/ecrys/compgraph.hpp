#pragma once

#include <algorithm>

#include "ecrys/genhw.hpp"

namespace ecrys {

// Directed graph on selected nodes of a fundamental crystal B(Λ) whose
// chains model the restricted highest-weight words of ⊕_k B(kΛ).
//
// Vertices are grown from the (I∖J)-highest-weight nodes of B(Λ) by a
// monotone fixpoint: a node b joins when every color i ∉ J with ε_i(b) > 0
// has a helper b' already in the graph with b ⊗ b' pairwise weakly
// increasing and φ_i(b') > 0.  In the level-0 variant a node with
// wt_0(b) < 0 additionally needs a helper with wt_0(b') > 0.
//
// Edges are the pairwise weakly increasing pairs; a vertex may carry a loop.
// The relation must be antisymmetric on distinct vertices and transitively
// closed; `reduced` holds its transitive reduction.
class CompGraph {
 public:
  const RootData* rd = nullptr;
  int fund = 0;
  std::vector<int> J;
  bool level0 = false;
  CrystalGraph base;     // B(Λ_fund), one component
  std::vector<int> verts;  // base node ids, ascending
  std::vector<std::pair<int, int>> reduced;  // transitive reduction

  static CompGraph build(const RootData& rd, int fund, std::vector<int> J,
                         bool level0) {
    Weight lambda;
    lambda[fund] = 1;
    CompGraph g(gen_classical(rd, lambda));
    g.rd = &rd;
    g.fund = fund;
    g.J = std::move(J);
    std::sort(g.J.begin(), g.J.end());
    g.level0 = level0;

    const int n = g.base.size();
    const auto& oracle = FactorPairOracle::get(rd, fund, fund);
    std::vector<bool> R(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        R[static_cast<std::size_t>(u) * n + v] =
            oracle.pwi(g.base.word_of[u], g.base.word_of[v]);

    std::vector<char> in(n, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int b = 0; b < n; ++b) {
        if (in[b]) continue;
        bool ok = true;
        for (int i = 1; ok && i <= rd.rank; ++i) {
          if (g.base.earr[b][i] < 0) continue;  // ε_i(b) = 0
          if (std::binary_search(g.J.begin(), g.J.end(), i)) continue;
          bool helped = false;
          for (int h = 0; !helped && h < n; ++h)
            helped = in[h] && R[static_cast<std::size_t>(b) * n + h] &&
                     g.base.farr[h][i] >= 0;
          ok = helped;
        }
        if (ok && level0 && g.base.weight(b)[0] < 0) {
          bool helped = false;
          for (int h = 0; !helped && h < n; ++h)
            helped = in[h] && R[static_cast<std::size_t>(b) * n + h] &&
                     g.base.weight(h)[0] > 0;
          ok = helped;
        }
        if (ok) {
          in[b] = 1;
          changed = true;
        }
      }
    }

    for (int b = 0; b < n; ++b)
      if (in[b]) g.verts.push_back(b);
    const int m = g.nv();
    g.rel_.assign(static_cast<std::size_t>(m) * m, false);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        g.rel_[static_cast<std::size_t>(i) * m + j] =
            R[static_cast<std::size_t>(g.verts[i]) * n + g.verts[j]];

    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i != j && g.pwi(i, j) && g.pwi(j, i))
          throw std::runtime_error("CompGraph: 2-cycle");
        for (int k = 0; k < m; ++k)
          if (g.pwi(i, j) && g.pwi(j, k) && !g.pwi(i, k))
            throw std::runtime_error("CompGraph: not transitively closed");
      }

    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j || !g.pwi(i, j)) continue;
        bool implied = false;
        for (int k = 0; !implied && k < m; ++k)
          implied = k != i && k != j && g.pwi(i, k) && g.pwi(k, j);
        if (!implied) g.reduced.emplace_back(i, j);
      }
    return g;
  }

  int nv() const { return static_cast<int>(verts.size()); }

  // pairwise weakly increasing relation on vertex indices (loops included)
  bool pwi(int i, int j) const {
    return rel_[static_cast<std::size_t>(i) * nv() + j];
  }
  bool loop(int i) const { return pwi(i, i); }

  // all source→sink paths of the reduced graph, each a maximal chain
  std::vector<std::vector<int>> maximal_chains() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> has_in(nv(), false);
    for (auto [i, j] : reduced) has_in[j] = true;
    std::vector<int> path;
    for (int s = 0; s < nv(); ++s)
      if (!has_in[s]) {
        path.push_back(s);
        walk(path, out);
        path.pop_back();
      }
    return out;
  }

  // chains with multiplicities summing to k (loopless vertices at most once),
  // each with its concatenated word in path order
  struct ChainWord {
    std::vector<int> mult;  // per vertex index
    Word word;
  };

  std::vector<ChainWord> chain_words(int k) const {
    std::vector<ChainWord> out;
    for (uint32_t mask = 0; mask < (1u << nv()); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < nv(); ++i)
        if (mask & (1u << i)) s.push_back(i);
      if (static_cast<int>(s.size()) > k) continue;
      bool chain = true;
      for (std::size_t x = 0; chain && x < s.size(); ++x)
        for (std::size_t y = x + 1; chain && y < s.size(); ++y)
          chain = pwi(s[x], s[y]) || pwi(s[y], s[x]);
      if (!chain) continue;
      std::sort(s.begin(), s.end(),
                [&](int x, int y) { return x != y && pwi(x, y); });
      for (std::size_t x = 0; x + 1 < s.size(); ++x)
        if (!pwi(s[x], s[x + 1]))
          throw std::runtime_error("chain_words: order not total");
      std::vector<int> mult(s.size(), 1);
      distribute(s, mult, 0, k - static_cast<int>(s.size()), out);
    }
    return out;
  }

  // chain words that are ε_i = 0 for i ∈ I∖J, plus wt_0 ≥ 0 in the level-0
  // variant: the restricted highest-weight words of B(kΛ)
  std::vector<ChainWord> hw_words(int k) const {
    Shape sh = word_shape(k);
    std::vector<ChainWord> out;
    for (ChainWord& cw : chain_words(k)) {
      bool ok = true;
      for (int i = 1; ok && i <= rd->rank; ++i) {
        if (std::binary_search(J.begin(), J.end(), i)) continue;
        ok = sh.eps(cw.word, i) == 0;
      }
      if (ok && level0) ok = sh.weight(cw.word)[0] >= 0;
      if (ok) out.push_back(std::move(cw));
    }
    return out;
  }

  // the shape holding a k-factor word
  Shape word_shape(int k) const {
    Shape sh;
    sh.rd = rd;
    const FundFactor& f = fund_factor(*rd, fund);
    for (int i = 0; i < k; ++i) sh.append_factor(f.slots);
    return sh;
  }

 private:
  std::vector<bool> rel_;

  explicit CompGraph(CrystalGraph b) : base(std::move(b)) {}

  void walk(std::vector<int>& path,
            std::vector<std::vector<int>>& out) const {
    bool extended = false;
    for (auto [i, j] : reduced)
      if (i == path.back()) {
        extended = true;
        path.push_back(j);
        walk(path, out);
        path.pop_back();
      }
    if (!extended) out.push_back(path);
  }

  void distribute(const std::vector<int>& s, std::vector<int>& mult,
                  std::size_t pos, int left,
                  std::vector<ChainWord>& out) const {
    if (pos == s.size()) {
      if (left != 0) return;
      ChainWord cw;
      cw.mult.assign(nv(), 0);
      for (std::size_t x = 0; x < s.size(); ++x) cw.mult[s[x]] = mult[x];
      for (std::size_t x = 0; x < s.size(); ++x) {
        const Word& w = base.word_of[verts[s[x]]];
        for (int r = 0; r < mult[x]; ++r)
          cw.word.insert(cw.word.end(), w.begin(), w.end());
      }
      out.push_back(std::move(cw));
      return;
    }
    int cap = loop(s[pos]) ? left : 0;
    for (int extra = 0; extra <= cap; ++extra) {
      mult[pos] = 1 + extra;
      distribute(s, mult, pos + 1, left - extra, out);
    }
    mult[pos] = 1;
  }
};

// Named vertices of a six-vertex adjoint chain graph u→a→{b,c}, b→e,
// c→d→e with loops everywhere except d, identified structurally: u is the
// unique source, e the unique sink, d the unique loopless vertex, c its
// reduced predecessor, a the reduced successor of u, b the remaining vertex.
struct AdjNames {
  int u, a, b, c, d, e;  // vertex indices
};

inline AdjNames adjoint_names(const CompGraph& g) {
  if (g.nv() != 6) throw std::runtime_error("adjoint_names: want 6 vertices");
  auto unique_pick = [&](auto&& pred, const char* what) {
    int found = -1;
    for (int i = 0; i < g.nv(); ++i)
      if (pred(i)) {
        if (found >= 0) throw std::runtime_error(std::string("adjoint_names: duplicate ") + what);
        found = i;
      }
    if (found < 0) throw std::runtime_error(std::string("adjoint_names: missing ") + what);
    return found;
  };
  std::vector<bool> has_in(g.nv(), false), has_out(g.nv(), false);
  for (auto [i, j] : g.reduced) {
    has_in[j] = true;
    has_out[i] = true;
  }
  AdjNames n{};
  n.u = unique_pick([&](int i) { return !has_in[i]; }, "source");
  n.e = unique_pick([&](int i) { return !has_out[i]; }, "sink");
  n.d = unique_pick([&](int i) { return !g.loop(i); }, "loopless vertex");
  n.c = unique_pick(
      [&](int i) {
        for (auto [x, y] : g.reduced)
          if (x == i && y == n.d) return true;
        return false;
      },
      "predecessor of the loopless vertex");
  n.a = unique_pick(
      [&](int i) {
        for (auto [x, y] : g.reduced)
          if (x == n.u && y == i) return true;
        return false;
      },
      "successor of the source");
  n.b = unique_pick(
      [&](int i) {
        return i != n.u && i != n.a && i != n.c && i != n.d && i != n.e;
      },
      "remaining vertex");
  std::vector<std::pair<int, int>> want = {{n.u, n.a}, {n.a, n.b}, {n.a, n.c},
                                           {n.b, n.e}, {n.c, n.d}, {n.d, n.e}};
  std::sort(want.begin(), want.end());
  auto got = g.reduced;
  std::sort(got.begin(), got.end());
  if (got != want) throw std::runtime_error("adjoint_names: unexpected edges");
  return n;
}

// Named vertices (a, b, b', c, c', c'', d, d', e, e', f) of the eleven-vertex
// level-0 chain graph, identified by their statistics
// (wt_2, wt_3, wt_5, φ_1, φ_6), which separate the vertices.
inline std::array<int, 11> level0_names(const CompGraph& g) {
  if (g.nv() != 11) throw std::runtime_error("level0_names: want 11 vertices");
  static const int stat[11][5] = {
      {-1, 0, 0, 1, 1},   // a
      {-1, 1, 0, 0, 1},   // b
      {-1, 0, 1, 1, 0},   // b'
      {0, 0, -1, 0, 2},   // c
      {-1, 1, 1, 0, 0},   // c'
      {0, -1, 0, 2, 0},   // c''
      {0, 0, 0, 0, 1},    // d
      {0, 0, 0, 1, 0},    // d'
      {0, 0, 1, 0, 0},    // e
      {0, 1, 0, 0, 0},    // e'
      {1, 0, 0, 0, 0},    // f
  };
  std::array<int, 11> names;
  names.fill(-1);
  for (int i = 0; i < 11; ++i) {
    int v = g.verts[i];
    int s[5] = {g.base.weight(v)[2], g.base.weight(v)[3], g.base.weight(v)[5],
                g.base.phi(v, 1), g.base.phi(v, 6)};
    int match = -1;
    for (int t = 0; t < 11; ++t)
      if (std::equal(s, s + 5, stat[t])) {
        if (match >= 0) throw std::runtime_error("level0_names: ambiguous");
        match = t;
      }
    if (match < 0 || names[match] >= 0)
      throw std::runtime_error("level0_names: no unique match");
    names[match] = i;
  }
  return names;
}

// Multiplicity solution for the six-vertex adjoint chain u→a→{b,c}, b→e,
// c→d→e (loops everywhere except d), solved from the word statistics
//   k  = number of factors,
//   Lu = wt at the u-coordinate, Lb = at the b-coordinate, Le = at the
//   e-coordinate
// of a restricted highest-weight word.
struct AdjChainSol {
  int u = 0, a = 0, b = 0, c = 0, d = 0, e = 0;
  bool operator==(const AdjChainSol&) const = default;
};

inline std::vector<AdjChainSol> weak_comp_solve(int k, int Lu, int Lb,
                                                int Le) {
  std::vector<AdjChainSol> out;
  auto push = [&](const AdjChainSol& s) {
    if (s.u < 0 || s.a < 0 || s.b < 0 || s.c < 0 || s.d < 0 || s.d > 1 ||
        s.e < 0)
      return;
    if (s.u + s.a + s.b + s.c + s.d + s.e != k) return;
    for (const AdjChainSol& t : out)
      if (t == s) return;
    out.push_back(s);
  };
  {  // upper chain u→a→b→e
    AdjChainSol s;
    s.u = Lu;
    s.a = k - Lu - Lb - Le;
    s.e = k - Lu - Lb;
    s.b = Lu + 2 * Lb + Le - k;
    push(s);
  }
  {  // lower chain u→a→c→d→e
    AdjChainSol s;
    s.u = Lu;
    s.a = Lb;
    int rhs = k - Lu + Le;  // = 2e + d
    if (rhs >= 0) {
      s.d = rhs & 1;
      s.e = (rhs - s.d) / 2;
      s.c = s.e - Le - Lb;
      push(s);
    }
  }
  return out;
}

// φ and ε of the masked color on such a word
inline int weak_comp_phi(int k, int Lu, int Lb, int Le) {
  return k - Lu - Lb - Le;
}
inline int weak_comp_eps(int k, int Lu, int Lb, int Le) {
  return k - Lu + Le;
}

// Multiplicity solution for the eleven-vertex level-0 chain graph with
// vertices (a, b, b', c, c', c'', d, d', e, e', f) in that order, solved
// from the statistics (L2, L3, L5, j, k) of a doubly restricted level-0
// highest-weight word.  Several closed forms cover the parameter space;
// every valid one is returned with its case number (1-6).
struct Level0Sol {
  std::array<int, 11> m{};  // a b b' c c' c'' d d' e e' f
  bool operator==(const Level0Sol&) const = default;
};

enum Level0Index { vA, vB, vBp, vC, vCp, vCpp, vD, vDp, vE, vEp, vF };

inline bool level0_admissible(int L2, int L3, int L5, int j, int k) {
  return L2 >= 0 && L3 >= 0 && L5 >= 0 && L2 + L3 + L5 <= j && j <= k;
}

inline std::vector<std::pair<int, Level0Sol>> level0_solve(int L2, int L3,
                                                             int L5, int j,
                                                             int k) {
  std::vector<std::pair<int, Level0Sol>> out;
  if (!level0_admissible(L2, L3, L5, j, k)) return out;
  const int p6 = j - L2 - L3 - L5;  // φ_6
  const int r = k - j;              // φ_1
  auto push = [&](int case_no, const Level0Sol& s) {
    int total = 0;
    for (int x : s.m) {
      if (x < 0) return;
      total += x;
    }
    if (s.m[vD] > 1 || s.m[vDp] > 1) return;
    if (total != k) return;
    out.emplace_back(case_no, s);
  };
  if (r + L3 <= p6) {  // case 1: chain a b c d e f
    Level0Sol s;
    s.m[vF] = r + L2 + L3;
    s.m[vA] = r;
    s.m[vB] = L3;
    int rhs = p6 - r - L3;  // = 2c + d
    s.m[vD] = rhs & 1;
    s.m[vC] = (rhs - s.m[vD]) / 2;
    s.m[vE] = s.m[vC] + L5;
    push(1, s);
  }
  if (r <= p6 && p6 <= r + L3 && r + L3 <= p6 + L5) {  // case 2: a b c' e f
    Level0Sol s;
    s.m[vA] = r;
    s.m[vB] = p6 - r;
    s.m[vCp] = L3 + r - p6;
    s.m[vE] = L5 - L3 + p6 - r;
    s.m[vF] = r + L2 + L3;
    push(2, s);
  }
  if (p6 <= r && r + L3 <= p6 + L5) {  // case 3: a b' c' e f
    Level0Sol s;
    s.m[vA] = p6;
    s.m[vCp] = L3;
    s.m[vBp] = r - p6;
    s.m[vE] = p6 - r - L3 + L5;
    s.m[vF] = r + L2 + L3;
    push(3, s);
  }
  if (p6 <= r && r <= p6 + L5 && p6 + L5 <= r + L3) {  // case 4: a b' c' e' f
    Level0Sol s;
    s.m[vA] = p6;
    s.m[vF] = j - L3;
    s.m[vEp] = r - p6 + L3 - L5;
    s.m[vCp] = p6 - r + L5;
    s.m[vBp] = r - p6;
    push(4, s);
  }
  if (r <= p6 && p6 + L5 <= r + L3) {  // case 5: a b c' e' f
    Level0Sol s;
    s.m[vF] = j - L3;
    s.m[vEp] = r - p6 - L5 + L3;
    s.m[vB] = p6 - r;
    s.m[vA] = r;
    s.m[vCp] = L5;
    push(5, s);
  }
  if (p6 + L5 < r) {  // case 6: a b' c'' d' e' f
    Level0Sol s;
    s.m[vA] = p6;
    s.m[vBp] = L5;
    s.m[vF] = j - L3;
    int rhs = r - p6 + 2 * L3 - L5;  // = d' + 2e'
    s.m[vDp] = rhs & 1;
    s.m[vEp] = (rhs - s.m[vDp]) / 2;
    s.m[vCpp] = s.m[vEp] - L3;
    push(6, s);
  }
  return out;
}

}  // namespace ecrys
