#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecrys/compgraph.hpp"

namespace ecrys {

// Detached arrow tables, for experiments that corrupt a crystal graph.
struct ArrowTable {
  int n = 0;
  std::vector<std::array<int, 8>> farr, earr;

  int size() const { return n; }
  int f(int v, int c) const { return farr[v][c]; }
  int e(int v, int c) const { return earr[v][c]; }

  static ArrowTable from(const CrystalGraph& g) {
    ArrowTable t;
    t.n = g.size();
    t.farr.resize(t.n);
    t.earr.resize(t.n);
    for (int v = 0; v < t.n; ++v)
      for (int c = 0; c < 8; ++c) {
        t.farr[v][c] = g.f(v, c);
        t.earr[v][c] = g.e(v, c);
      }
    return t;
  }
};

// Pass/fail verdict carrying the first failure witness.
struct VerReport {
  bool pass = true;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) {
      pass = false;
      witness = w;
    }
  }
};

namespace detail {

// String length along f (resp. e) arrows of one color; -1 on a cycle.
template <class G>
int walk_phi(const G& g, int v, int c, int cap) {
  int k = 0;
  for (int cur = g.f(v, c); cur >= 0; cur = g.f(cur, c))
    if (++k > cap) return -1;
  return k;
}

template <class G>
int walk_eps(const G& g, int v, int c, int cap) {
  int k = 0;
  for (int cur = g.e(v, c); cur >= 0; cur = g.e(cur, c))
    if (++k > cap) return -1;
  return k;
}

template <class G>
int apply_e(const G& g, int v, std::initializer_list<int> colors) {
  for (int c : colors) {
    if (v < 0) return -1;
    v = g.e(v, c);
  }
  return v;
}

template <class G>
int apply_f(const G& g, int v, std::initializer_list<int> colors) {
  for (int c : colors) {
    if (v < 0) return -1;
    v = g.f(v, c);
  }
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Checker 1: the simply-laced local axioms.  For every node and ordered color
// pair (i,j) the bookkeeping deltas of eps_j/phi_j across an i-arrow must land
// in the two allowed patterns, orthogonal colors must commute, and adjacent
// colors must satisfy the square/diamond relations (in both the raising and
// lowering direction).
// ---------------------------------------------------------------------------
template <class G>
VerReport check_local_axioms(const G& g, const RootData& rd,
                             const std::vector<int>& colors) {
  VerReport rep;
  const int n = g.size();
  std::vector<std::vector<int>> phi(8), eps(8);
  for (int c : colors) {
    phi[c].assign(n, 0);
    eps[c].assign(n, 0);
    for (int v = 0; v < n; ++v) {
      phi[c][v] = detail::walk_phi(g, v, c, n);
      eps[c][v] = detail::walk_eps(g, v, c, n);
      if (phi[c][v] < 0 || eps[c][v] < 0) {
        std::ostringstream os;
        os << "color " << c << " string through node " << v
           << " does not terminate";
        rep.fail(os.str());
        return rep;
      }
    }
  }

  auto cartan = [&](int i, int j) { return rd.simple_root(j)[i]; };
  auto witness = [&](int v, int i, int j, const char* what) {
    std::ostringstream os;
    os << what << " at node " << v << " colors {" << i << "," << j << "}";
    rep.fail(os.str());
  };

  for (int v = 0; v < n && rep.pass; ++v) {
    // arrows pair up as mutual inverses
    for (int i : colors) {
      int y = g.e(v, i);
      if (y >= 0 && g.f(y, i) != v) witness(v, i, i, "e without inverse f");
      int z = g.f(v, i);
      if (z >= 0 && g.e(z, i) != v) witness(v, i, i, "f without inverse e");
    }
    for (int i : colors) {
      for (int j : colors) {
        if (i == j) continue;
        const int a = cartan(i, j);
        int y = g.e(v, i);
        if (y >= 0) {
          int de = eps[j][y] - eps[j][v];
          int dp = phi[j][y] - phi[j][v];
          if (!((de == 0 && dp == a) || (de == -a && dp == 0)))
            witness(v, i, j, "raising bookkeeping");
        }
        int z = g.f(v, i);
        if (z >= 0) {
          int de = eps[j][z] - eps[j][v];
          int dp = phi[j][z] - phi[j][v];
          if (!((de == 0 && dp == -a) || (de == a && dp == 0)))
            witness(v, i, j, "lowering bookkeeping");
        }
      }
    }
    for (std::size_t s = 0; s < colors.size() && rep.pass; ++s) {
      for (std::size_t t = s + 1; t < colors.size() && rep.pass; ++t) {
        const int i = colors[s], j = colors[t];
        const int a = cartan(i, j);
        int ei = g.e(v, i), ej = g.e(v, j);
        int fi = g.f(v, i), fj = g.f(v, j);
        if (a == 0) {
          if (ei >= 0 && ej >= 0) {
            int u = g.e(ei, j), w = g.e(ej, i);
            if (u < 0 || u != w) witness(v, i, j, "raising commutation");
          }
          if (fi >= 0 && fj >= 0) {
            int u = g.f(fi, j), w = g.f(fj, i);
            if (u < 0 || u != w) witness(v, i, j, "lowering commutation");
          }
        } else if (a == -1) {
          if (ei >= 0 && ej >= 0) {
            int dij = eps[j][ei] - eps[j][v];
            int dji = eps[i][ej] - eps[i][v];
            if (dij == 0 || dji == 0) {
              int u = g.e(ei, j), w = g.e(ej, i);
              if (u < 0 || u != w) witness(v, i, j, "raising square");
            } else {
              int u = detail::apply_e(g, v, {i, j, j, i});
              int w = detail::apply_e(g, v, {j, i, i, j});
              if (u < 0 || u != w) witness(v, i, j, "raising diamond");
            }
          }
          if (fi >= 0 && fj >= 0) {
            int dij = phi[j][fi] - phi[j][v];
            int dji = phi[i][fj] - phi[i][v];
            if (dij == 0 || dji == 0) {
              int u = g.f(fi, j), w = g.f(fj, i);
              if (u < 0 || u != w) witness(v, i, j, "lowering square");
            } else {
              int u = detail::apply_f(g, v, {i, j, j, i});
              int w = detail::apply_f(g, v, {j, i, i, j});
              if (u < 0 || u != w) witness(v, i, j, "lowering diamond");
            }
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rank-2 reference crystals for checker 2.
// ---------------------------------------------------------------------------

// Classical crystal with two orthogonal colors: an (a+1) x (b+1) grid.
struct GridRef {
  int a = 0, b = 0;
  int size() const { return (a + 1) * (b + 1); }
  int hw() const { return 0; }
  int f(int v, int c) const {
    int x = v / (b + 1), y = v % (b + 1);
    if (c == 1) return x < a ? v + (b + 1) : -1;
    return y < b ? v + 1 : -1;
  }
  int e(int v, int c) const {
    int x = v / (b + 1), y = v % (b + 1);
    if (c == 1) return x > 0 ? v - (b + 1) : -1;
    return y > 0 ? v - 1 : -1;
  }
};

// Classical crystal with two adjacent colors, built on words over the
// three-letter crystal (f_1: 0 -> 1, f_2: 1 -> 2) from the highest-weight
// word (0)^a (1 0)^b using the same bracket discipline as the main tensor
// rule.  Serves as an independent reference for checker 2.
struct A2Ref {
  std::vector<std::vector<uint8_t>> words;
  std::vector<std::array<int, 2>> farr, earr;

  int size() const { return static_cast<int>(words.size()); }
  int hw() const { return 0; }
  int f(int v, int c) const { return farr[v][c - 1]; }
  int e(int v, int c) const { return earr[v][c - 1]; }

  // signature positions: letter c-1 lowers (minus), letter c raises (plus)
  static int act(std::vector<uint8_t>& w, int c, bool lower) {
    std::vector<int> plus_stack;
    int fpos = -1;
    for (int at = 0; at < static_cast<int>(w.size()); ++at) {
      if (w[at] == c - 1) {
        if (!plus_stack.empty())
          plus_stack.pop_back();
        else
          fpos = at;
      } else if (w[at] == c) {
        plus_stack.push_back(at);
      }
    }
    if (lower) {
      if (fpos < 0) return -1;
      ++w[fpos];
      return fpos;
    }
    if (plus_stack.empty()) return -1;
    --w[plus_stack.front()];
    return plus_stack.front();
  }

  static A2Ref build(int a, int b) {
    A2Ref r;
    std::vector<uint8_t> seed;
    for (int t = 0; t < a; ++t) seed.push_back(0);
    for (int t = 0; t < b; ++t) {
      seed.push_back(1);
      seed.push_back(0);
    }
    std::map<std::vector<uint8_t>, int> index;
    index.emplace(seed, 0);
    r.words.push_back(seed);
    r.farr.push_back({-1, -1});
    r.earr.push_back({-1, -1});
    for (int v = 0; v < static_cast<int>(r.words.size()); ++v) {
      for (int c = 1; c <= 2; ++c) {
        std::vector<uint8_t> w = r.words[v];
        if (act(w, c, true) < 0) continue;
        auto [it, fresh] = index.emplace(w, static_cast<int>(r.words.size()));
        if (fresh) {
          r.words.push_back(w);
          r.farr.push_back({-1, -1});
          r.earr.push_back({-1, -1});
        }
        r.farr[v][c - 1] = it->second;
        r.earr[it->second][c - 1] = v;
      }
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Checker 2: every {i,j}-component must contain a unique highest-weight node
// and be rigidly isomorphic to the classical rank-2 crystal generated from it.
// ---------------------------------------------------------------------------
template <class G, class R>
bool rigid_iso(const G& g, const std::vector<int>& comp, int ghw, const R& ref,
               int ci, int cj) {
  if (static_cast<int>(comp.size()) != ref.size()) return false;
  std::map<int, int> fwd;
  std::vector<int> rev(ref.size(), -1);
  std::vector<std::pair<int, int>> queue{{ghw, ref.hw()}};
  fwd[ghw] = ref.hw();
  rev[ref.hw()] = ghw;
  const int gc[2] = {ci, cj};
  for (std::size_t at = 0; at < queue.size(); ++at) {
    auto [u, r] = queue[at];
    for (int t = 0; t < 2; ++t) {
      int gu = g.f(u, gc[t]), rr = ref.f(r, t + 1);
      if ((gu >= 0) != (rr >= 0)) return false;
      int hu = g.e(u, gc[t]), hr = ref.e(r, t + 1);
      if ((hu >= 0) != (hr >= 0)) return false;
      for (auto [x, y] : {std::pair<int, int>{gu, rr}, {hu, hr}}) {
        if (x < 0) continue;
        auto it = fwd.find(x);
        if (it != fwd.end()) {
          if (it->second != y) return false;
        } else {
          if (rev[y] >= 0) return false;
          fwd.emplace(x, y);
          rev[y] = x;
          queue.push_back({x, y});
        }
      }
    }
  }
  return fwd.size() == comp.size();
}

template <class G>
VerReport check_rank2_components(const G& g, const RootData& rd,
                                 const std::vector<int>& colors) {
  VerReport rep;
  const int n = g.size();
  auto cartan = [&](int i, int j) { return rd.simple_root(j)[i]; };
  for (std::size_t s = 0; s < colors.size() && rep.pass; ++s) {
    for (std::size_t t = s + 1; t < colors.size() && rep.pass; ++t) {
      const int i = colors[s], j = colors[t];
      std::vector<int> comp_of(n, -1);
      for (int v0 = 0; v0 < n && rep.pass; ++v0) {
        if (comp_of[v0] >= 0) continue;
        std::vector<int> comp{v0};
        comp_of[v0] = v0;
        for (std::size_t at = 0; at < comp.size(); ++at) {
          for (int nb : {g.f(comp[at], i), g.f(comp[at], j), g.e(comp[at], i),
                         g.e(comp[at], j)}) {
            if (nb >= 0 && comp_of[nb] < 0) {
              comp_of[nb] = v0;
              comp.push_back(nb);
            }
          }
        }
        std::vector<int> hws;
        for (int v : comp)
          if (g.e(v, i) < 0 && g.e(v, j) < 0) hws.push_back(v);
        if (hws.size() != 1) {
          std::ostringstream os;
          os << "{" << i << "," << j << "}-component of node " << v0 << " has "
             << hws.size() << " highest-weight nodes";
          rep.fail(os.str());
          break;
        }
        int h = hws[0];
        int a = detail::walk_phi(g, h, i, n), b = detail::walk_phi(g, h, j, n);
        if (a < 0 || b < 0) {
          rep.fail("string through component head does not terminate");
          break;
        }
        bool ok;
        if (cartan(i, j) == 0) {
          GridRef ref{a, b};
          ok = rigid_iso(g, comp, h, ref, i, j);
        } else {
          ok = rigid_iso(g, comp, h, A2Ref::build(a, b), i, j);
        }
        if (!ok) {
          std::ostringstream os;
          os << "{" << i << "," << j << "}-component of node " << h
             << " is not the rank-2 crystal generated by its head";
          rep.fail(os.str());
        }
      }
    }
  }
  return rep;
}

// Both implementations run on every input; they must reach the same verdict.
struct RegularReport {
  VerReport local, rank2;
  bool agree = true;
  bool pass = true;
};

template <class G>
RegularReport check_regular(const G& g, const RootData& rd,
                            const std::vector<int>& colors) {
  RegularReport r;
  r.local = check_local_axioms(g, rd, colors);
  r.rank2 = check_rank2_components(g, rd, colors);
  r.agree = (r.local.pass == r.rank2.pass);
  r.pass = r.local.pass && r.rank2.pass;
  return r;
}

// ---------------------------------------------------------------------------
// Map order: p^n = id and no smaller positive power is the identity.
// ---------------------------------------------------------------------------
inline bool check_order(const std::vector<int>& p, int n) {
  const int m = static_cast<int>(p.size());
  std::vector<int> cur(m), id(m);
  std::iota(id.begin(), id.end(), 0);
  cur = id;
  for (int k = 1; k <= n; ++k) {
    for (int v = 0; v < m; ++v) cur[v] = p[cur[v]];
    if (k < n && cur == id) return false;
  }
  return cur == id;
}

// ---------------------------------------------------------------------------
// Statistics separation: the nodes of g that are highest weight for
// hw_colors must be pairwise distinguished by the selected statistics.
// ---------------------------------------------------------------------------
inline VerReport check_statistics_distinguish(const CrystalGraph& g,
                                              const std::vector<int>& hw_colors,
                                              const std::vector<int>& wt_coords,
                                              const std::vector<int>& phi_coords,
                                              const std::vector<int>& eps_coords) {
  VerReport rep;
  std::map<std::vector<int>, int> seen;
  for (int v : hw_nodes(g, hw_colors)) {
    std::vector<int> key;
    for (int c : wt_coords) key.push_back(g.weight(v)[c]);
    for (int c : phi_coords) key.push_back(g.phi(v, c));
    for (int c : eps_coords) key.push_back(g.eps(v, c));
    auto [it, fresh] = seen.emplace(std::move(key), v);
    if (!fresh) {
      rep.fail("statistics collision: " + g.label(it->second) + " vs " +
               g.label(v));
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Oriented-matroid circuits of a 5-row integer matrix, by exact cofactor
// 5x5 determinants over the 6-subsets of columns.
// ---------------------------------------------------------------------------
namespace detail {

inline long long int_det(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  long long acc = 0, sign = 1;
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> sub(n - 1);
    for (int r = 1; r < n; ++r)
      for (int cc = 0; cc < n; ++cc)
        if (cc != c) sub[r - 1].push_back(m[r][cc]);
    acc += sign * m[0][c] * int_det(std::move(sub));
    sign = -sign;
  }
  return acc;
}

}  // namespace detail

// A circuit as the canonical primitive dependence vector (first nonzero
// entry positive) together with its sign pattern.
struct Circuit {
  std::vector<long long> dep;
  std::vector<int> sign;

  bool operator<(const Circuit& o) const { return dep < o.dep; }
  bool operator==(const Circuit& o) const { return dep == o.dep; }
};

struct CircuitSet {
  std::vector<Circuit> circuits;  // canonical representatives, sorted
  std::size_t unsigned_count = 0;
  std::size_t signed_count = 0;  // counts v and -v separately
};

inline CircuitSet matroid_circuits(
    const std::vector<std::array<long long, 5>>& cols) {
  const int n = static_cast<int>(cols.size());
  CircuitSet out;
  std::set<Circuit> seen;
  std::set<std::vector<int>> raw_signs;
  std::vector<int> pick(6);
  auto det_of = [&](const std::vector<int>& idx) {
    std::vector<std::vector<long long>> m(5, std::vector<long long>(5));
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) m[r][c] = cols[idx[c]][r];
    return detail::int_det(std::move(m));
  };
  // iterate sorted 6-subsets of columns
  std::vector<int> sub;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(sub.size()) == 6) {
      std::vector<long long> dep(n, 0);
      for (int j = 0; j < 6; ++j) {
        std::vector<int> minor;
        for (int t = 0; t < 6; ++t)
          if (t != j) minor.push_back(sub[t]);
        long long d = det_of(minor);
        dep[sub[j]] = (j % 2 == 0) ? d : -d;
      }
      bool zero = std::all_of(dep.begin(), dep.end(),
                              [](long long x) { return x == 0; });
      if (zero) return;
      // the cofactor vector really is a dependence
      for (int r = 0; r < 5; ++r) {
        long long acc = 0;
        for (int c = 0; c < n; ++c) acc += dep[c] * cols[c][r];
        if (acc != 0) throw std::logic_error("cofactor vector not a dependence");
      }
      std::vector<int> rs(n, 0);
      for (int c = 0; c < n; ++c) rs[c] = dep[c] > 0 ? 1 : dep[c] < 0 ? -1 : 0;
      raw_signs.insert(rs);
      long long g = 0;
      for (long long x : dep) g = std::gcd(g, x < 0 ? -x : x);
      for (long long& x : dep) x /= g;
      auto first = std::find_if(dep.begin(), dep.end(),
                                [](long long x) { return x != 0; });
      if (*first < 0)
        for (long long& x : dep) x = -x;
      Circuit c;
      c.dep = std::move(dep);
      c.sign.assign(n, 0);
      for (int t = 0; t < n; ++t)
        c.sign[t] = c.dep[t] > 0 ? 1 : c.dep[t] < 0 ? -1 : 0;
      seen.insert(std::move(c));
      return;
    }
    for (int v = from; v < n; ++v) {
      sub.push_back(v);
      self(self, v + 1);
      sub.pop_back();
    }
  };
  if (n >= 6) rec(rec, 0);
  out.circuits.assign(seen.begin(), seen.end());
  out.unsigned_count = out.circuits.size();
  // every raw sign pattern matches a canonical circuit up to global negation
  for (const auto& rs : raw_signs) {
    std::vector<int> neg(rs.size());
    for (std::size_t t = 0; t < rs.size(); ++t) neg[t] = -rs[t];
    bool hit = false;
    for (const auto& c : out.circuits)
      if (c.sign == rs || c.sign == neg) {
        hit = true;
        break;
      }
    if (!hit) throw std::logic_error("raw circuit escaped canonicalization");
  }
  out.signed_count = 2 * out.unsigned_count;
  return out;
}

// ---------------------------------------------------------------------------
// Exact integer rank by fraction-free elimination.
// ---------------------------------------------------------------------------
inline int int_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int colsn = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < colsn && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      long long a = m[rank][c], b = m[r][c];
      long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
      long long ma = b / g, mb = a / g;
      for (int cc = 0; cc < colsn; ++cc)
        m[r][cc] = m[r][cc] * mb - m[rank][cc] * ma;
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Statistics matrix of the doubly restricted level-0 chain graph: rows
// (wt_2, wt_3, wt_5, phi_1, phi_6) over the 11 vertices in standard order.
// ---------------------------------------------------------------------------
inline std::vector<std::array<long long, 5>> level0_stats_matrix(
    const CompGraph& g) {
  auto names = level0_names(g);
  std::vector<std::array<long long, 5>> cols(11);
  for (int t = 0; t < 11; ++t) {
    int v = g.verts[names[t]];
    const Weight& w = g.base.weight(v);
    cols[t] = {w[2], w[3], w[5],
               static_cast<long long>(g.base.phi(v, 1)),
               static_cast<long long>(g.base.phi(v, 6))};
  }
  return cols;
}

// ---------------------------------------------------------------------------
// Chain constraints: one side (the positive or negative part of a dependence
// vector, as a multiset over the 11 vertices) is realizable when its support
// lies inside a single maximal chain and no loopless vertex appears twice.
// ---------------------------------------------------------------------------
inline bool chain_side_valid(const CompGraph& g,
                             const std::vector<long long>& side) {
  auto names = level0_names(g);
  for (int t = 0; t < 11; ++t)
    if (side[t] > 1 && !g.loop(names[t])) return false;
  for (const auto& chain : g.maximal_chains()) {
    std::vector<char> on(g.nv(), 0);
    for (int v : chain) on[v] = 1;
    bool fits = true;
    for (int t = 0; t < 11 && fits; ++t)
      if (side[t] > 0 && !on[names[t]]) fits = false;
    if (fits) return true;
  }
  return false;
}

inline bool violates_chain_constraints(const CompGraph& g,
                                       const std::vector<long long>& dep) {
  std::vector<long long> pos(dep.size(), 0), neg(dep.size(), 0);
  for (std::size_t t = 0; t < dep.size(); ++t) {
    if (dep[t] > 0) pos[t] = dep[t];
    if (dep[t] < 0) neg[t] = -dep[t];
  }
  return !chain_side_valid(g, pos) || !chain_side_valid(g, neg);
}

inline VerReport check_circuits_violate_chains(const CircuitSet& cs,
                                               const CompGraph& g) {
  VerReport rep;
  for (const auto& c : cs.circuits) {
    if (c.dep.size() != 11) {
      rep.fail("circuit is not indexed by the 11 chain-graph vertices");
      return rep;
    }
    if (!violates_chain_constraints(g, c.dep)) {
      std::ostringstream os;
      os << "circuit (";
      for (std::size_t t = 0; t < c.dep.size(); ++t)
        os << (t ? "," : "") << c.dep[t];
      os << ") satisfies the chain constraints";
      rep.fail(os.str());
      return rep;
    }
  }
  return rep;
}

}  // namespace ecrys
