#pragma once

// Affine crystals B^{r,s} built from classical data: a twisted bijection
// ("promotion") intertwines each classical arrow color c with its image
// under a diagram automorphism, and the missing affine 0-arrow is its
// pullback f_0 = p^{-1} ∘ f_{p(0)} ∘ p.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ecrys/compgraph.hpp"
#include "ecrys/genhw.hpp"
#include "ecrys/verify.hpp"

namespace ecrys {

// ---------------------------------------------------------------------------
// Twisted extension

struct TwistExt {
  std::vector<int> map;  // node -> image; -1 where unassigned
  VerReport rep;
};

// Grow the map from its seed values so that map(f_c x) = f_{t(c)}(map x)
// across every arrow with color in `allowed`.  A node forced to two
// different images is reported as a path-dependence witness; a vanishing
// target arrow or an unreached node is reported likewise.  On success the
// map is a total bijection.
inline TwistExt extend_twisted(const CrystalGraph& g, const DiagramAut& t,
                               std::vector<int> seed,
                               const std::vector<int>& allowed) {
  TwistExt out{std::move(seed), {}};
  std::vector<int>& p = out.map;
  std::vector<int> work;
  for (int v = 0; v < g.size(); ++v)
    if (p[v] >= 0) work.push_back(v);
  for (std::size_t at = 0; at < work.size(); ++at) {
    int x = work[at];
    for (int c : allowed) {
      int y = g.f(x, c);
      if (y < 0) continue;
      int img = g.f(p[x], t(c));
      if (img < 0) {
        out.rep.fail("no image: f_" + std::to_string(t(c)) + " vanishes on " +
                     g.label(p[x]) + " while f_" + std::to_string(c) +
                     " reaches " + g.label(y));
        return out;
      }
      if (p[y] >= 0) {
        if (p[y] != img) {
          out.rep.fail("path-dependent image at " + g.label(y) + ": " +
                       g.label(p[y]) + " vs " + g.label(img));
          return out;
        }
      } else {
        p[y] = img;
        work.push_back(y);
      }
    }
  }
  std::vector<char> hit(g.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    if (p[v] < 0) {
      out.rep.fail("extension never reached " + g.label(v));
      return out;
    }
    if (hit[p[v]]++) {
      out.rep.fail("two nodes share the image " + g.label(p[v]));
      return out;
    }
  }
  return out;
}

// map(f_c x) = f_{t(c)}(map x) for every node and every affine color with
// t(c) != 0, including presence/absence of both sides.
inline VerReport verify_twist_arrows(const CrystalGraph& g,
                                     const std::vector<int>& p,
                                     const DiagramAut& t) {
  VerReport rep;
  for (int x = 0; x < g.size(); ++x)
    for (int c = 0; c <= g.rd->rank; ++c) {
      int y = g.f(x, c);
      int img = g.f(p[x], t(c));
      if ((y < 0) != (img < 0) || (y >= 0 && p[y] != img)) {
        rep.fail("twist breaks on arrow " + g.label(x) + " -" +
                 std::to_string(c) + "-> " +
                 (y < 0 ? std::string("(none)") : g.label(y)));
        return rep;
      }
    }
  return rep;
}

// wt_{t(i)}(map x) = wt_i(x) for every node and every affine color i.
inline VerReport verify_twist_weights(const CrystalGraph& g,
                                      const std::vector<int>& p,
                                      const DiagramAut& t) {
  VerReport rep;
  for (int v = 0; v < g.size(); ++v) {
    const Weight& w = g.weight(v);
    const Weight& u = g.weight(p[v]);
    for (int i = 0; i <= g.rd->rank; ++i)
      if (u.c[t(i)] != w.c[i]) {
        rep.fail("weight twist fails at " + g.label(v) + " color " +
                 std::to_string(i));
        return rep;
      }
  }
  return rep;
}

// Install f_0 = p^{-1} ∘ f_{t(0)} ∘ p (and its inverse e_0) on the graph.
inline void wire_zero(CrystalGraph& g, const std::vector<int>& p,
                      const DiagramAut& t) {
  std::vector<int> pinv(p.size());
  for (int v = 0; v < static_cast<int>(p.size()); ++v) pinv[p[v]] = v;
  for (int v = 0; v < g.size(); ++v) {
    int z = g.f(p[v], t(0));
    g.farr[v][0] = z < 0 ? -1 : pinv[z];
    if (z >= 0) g.earr[pinv[z]][0] = v;
  }
}

// ---------------------------------------------------------------------------
// Seed maps: where promotion sends the restricted highest-weight nodes

// Minuscule column (single classical component): a {1,..,5}-highest node is
// matched to the {2,..,6}-highest node of the twisted weight, which is
// unique because those nodes are multiplicity-free in weight.
inline std::vector<int> seeds_by_weight(const CrystalGraph& g,
                                        const DiagramAut& t,
                                        const std::vector<int>& dom,
                                        const std::vector<int>& img) {
  const RootData& rd = *g.rd;
  std::unordered_map<Weight, int, WeightHash> target;
  for (int v : hw_nodes(g, img))
    if (!target.emplace(g.weight(v), v).second)
      throw std::logic_error("seeds_by_weight: image weight repeated at " +
                             g.label(v));
  std::vector<int> seed(g.size(), -1);
  for (int b : hw_nodes(g, dom)) {
    auto it = target.find(rd.twist(t, g.weight(b)));
    if (it == target.end())
      throw std::logic_error("seeds_by_weight: no image for " + g.label(b));
    seed[b] = it->second;
  }
  return seed;
}

// Adjoint tower ⊕_{k<=s} B(kΛ_r): the image component index follows the
// box-count rule k' = (s - k) + (sum of the three tracked weights), and the
// image node is the unique restricted-hw node of the twisted statistics in
// that component.  `tracked` lists the three classical weight coordinates
// (in the order fixed by the twist orbit), `last` is the dropped color
// whose phi gives back the component index.
inline std::vector<int> seeds_adjoint(const CrystalGraph& g,
                                      const DiagramAut& t, int s,
                                      const std::vector<int>& dom,
                                      const std::vector<int>& img) {
  const RootData& rd = *g.rd;
  const bool e6 = rd.rank == 6;
  const std::array<int, 3> tracked =
      e6 ? std::array<int, 3>{2, 3, 5} : std::array<int, 3>{1, 2, 6};
  const int last = e6 ? 6 : 7;

  std::map<std::array<int, 4>, int> target;
  for (int v : hw_nodes(g, img)) {
    const Weight& w = g.weight(v);
    std::array<int, 4> key{g.comp_of[v], w.c[tracked[0]], w.c[tracked[1]],
                           w.c[tracked[2]]};
    if (!target.emplace(key, v).second)
      throw std::logic_error("seeds_adjoint: image key repeated at " +
                             g.label(v));
  }

  std::vector<int> seed(g.size(), -1);
  for (int b : hw_nodes(g, dom)) {
    const Weight& w = g.weight(b);
    int k = g.comp_of[b];
    int tracked_sum = w.c[tracked[0]] + w.c[tracked[1]] + w.c[tracked[2]];
    if (k != g.phi(b, last) + tracked_sum)
      throw std::logic_error("seeds_adjoint: box count mismatch at " +
                             g.label(b));
    int k2 = (s - k) + tracked_sum;
    if (k2 < 0 || k2 > s)
      throw std::logic_error("seeds_adjoint: image component out of range");
    // twisted statistics: coordinate i of the image equals coordinate
    // t^{-1}(i) of the source
    DiagramAut tinv = t.inverse(rd.ncolors());
    std::array<int, 4> key{k2, w.c[tinv(tracked[0])], w.c[tinv(tracked[1])],
                           w.c[tinv(tracked[2])]};
    auto it = target.find(key);
    if (it == target.end())
      throw std::logic_error("seeds_adjoint: no image for " + g.label(b));
    // independent existence check through the six-vertex chain solver,
    // whose coordinates are (u, b, e) of the image node
    if (weak_comp_solve(k2, w.c[tracked[2]], w.c[tracked[1]], w.c[tracked[0]])
            .size() != 1)
      throw std::logic_error("seeds_adjoint: chain solver disagrees at " +
                             g.label(b));
    seed[b] = it->second;
  }
  return seed;
}

// ---------------------------------------------------------------------------
// The affine crystals

struct KRCrystal {
  CrystalGraph g;          // classical graph plus the wired 0-arrows
  std::vector<int> prom;   // the twisted bijection
  DiagramAut twist;
  int r = 0, s = 0;
};

// B^{r,s}: type E6 supports r in {1,2,6} (order-3 twist), type E7 supports
// r = 1 (order-2 twist).  Throws if the construction runs into any
// inconsistency; the result carries verified-total promotion and 0-arrows.
inline KRCrystal kr_crystal(const RootData& rd, int r, int s) {
  if (s < 1) throw std::invalid_argument("kr_crystal: s must be positive");
  const bool e6 = rd.rank == 6;
  if (e6 ? (r != 1 && r != 2 && r != 6) : (r != 1))
    throw std::invalid_argument("kr_crystal: unsupported column " +
                                std::to_string(r));
  DiagramAut t = e6 ? rd.rotation3() : rd.involution2();

  std::vector<int> dom, img;
  for (int c = 1; c <= rd.rank; ++c) {
    if (t(c) != 0) dom.push_back(c);
    if (c != t(0)) img.push_back(c);
  }

  CrystalGraph g = [&] {
    if (e6 && r != 2) {
      Weight lam{};
      lam.c[r] = s;
      return gen_classical(rd, lam);
    }
    std::vector<Weight> lams(s + 1);
    for (int k = 0; k <= s; ++k) lams[k].c[e6 ? 2 : 1] = k;
    return gen_direct_sum(rd, lams);
  }();

  std::vector<int> seed = (e6 && r != 2)
                              ? seeds_by_weight(g, t, dom, img)
                              : seeds_adjoint(g, t, s, dom, img);
  TwistExt ext = extend_twisted(g, t, std::move(seed), dom);
  if (!ext.rep.pass)
    throw std::logic_error("kr_crystal: " + ext.rep.witness);
  wire_zero(g, ext.map, t);
  return KRCrystal{std::move(g), std::move(ext.map), t, r, s};
}

// ---------------------------------------------------------------------------
// Structure checks specific to the minuscule columns

// Parallel-BFS graph isomorphism: seeds pair up matched nodes, colors pair
// up matched arrow labels, and both f and e must mirror exactly.  Writes
// the forward map when requested.
inline bool colored_rigid_iso(const CrystalGraph& a, const CrystalGraph& b,
                              const std::vector<std::pair<int, int>>& seeds,
                              const std::vector<std::pair<int, int>>& colors,
                              std::vector<int>* out_map = nullptr) {
  if (a.size() != b.size()) return false;
  std::vector<int> fwd(a.size(), -1), rev(b.size(), -1);
  std::vector<int> work;
  for (auto [x, y] : seeds) {
    if (fwd[x] >= 0 || rev[y] >= 0) return false;
    fwd[x] = y;
    rev[y] = x;
    work.push_back(x);
  }
  for (std::size_t at = 0; at < work.size(); ++at) {
    int x = work[at];
    int y = fwd[x];
    for (auto [ca, cb] : colors)
      for (int dir = 0; dir < 2; ++dir) {
        int nx = dir ? a.e(x, ca) : a.f(x, ca);
        int ny = dir ? b.e(y, cb) : b.f(y, cb);
        if ((nx < 0) != (ny < 0)) return false;
        if (nx < 0) continue;
        if (fwd[nx] < 0 && rev[ny] < 0) {
          fwd[nx] = ny;
          rev[ny] = nx;
          work.push_back(nx);
        } else if (fwd[nx] != ny) {
          return false;
        }
      }
  }
  if (work.size() != static_cast<std::size_t>(a.size())) return false;
  if (out_map) *out_map = std::move(fwd);
  return true;
}

// The unique isomorphism of Dynkin diagrams from {0} ∪ I∖{r} (the affine
// diagram with node r deleted) onto the classical diagram, for the two
// minuscule columns.
inline std::vector<std::pair<int, int>> restriction_color_map(int r) {
  if (r == 1)
    return {{0, 1}, {2, 3}, {3, 2}, {4, 4}, {5, 5}, {6, 6}};
  if (r == 6)
    return {{0, 6}, {1, 1}, {2, 5}, {3, 3}, {4, 4}, {5, 2}};
  throw std::invalid_argument("restriction_color_map: r must be 1 or 6");
}

// Dropping color r from B^{r,s} (r minuscule) and relabeling the remaining
// colors along the deleted-node diagram isomorphism gives the partner
// classical crystal B(sΛ_{r'}).  The matched seed is the node whose s slots
// all carry the weight Λ_{r'} - Λ_r.
inline bool restriction_iso_check(const KRCrystal& kr) {
  const RootData& rd = *kr.g.rd;
  if (rd.rank != 6 || (kr.r != 1 && kr.r != 6)) return false;
  int other = kr.r == 1 ? 6 : 1;
  Weight lam{};
  lam.c[other] = kr.s;
  CrystalGraph h = gen_classical(rd, lam);

  Weight lw{};
  lw.c[kr.r] = -1;
  lw.c[other] = 1;
  const Letters& L = kr.r == 1 ? Letters::e6_L1() : Letters::e6_L6();
  int li = L.index_of(rd.with_level0(lw));
  if (li < 0) return false;
  Word w(static_cast<std::size_t>(kr.s), static_cast<std::uint8_t>(li));
  int src = kr.g.node_id(0, w);
  if (src < 0) return false;

  return colored_rigid_iso(kr.g, h, {{src, 0}}, restriction_color_map(kr.r));
}

// The 0-arrows of a minuscule B^{r,s} are forced: with K the classical
// colors without r, the K-restricted hw nodes match the partner crystal's
// by K-weight in exactly one way, that matching extends to exactly one
// rigid K-isomorphism, and pulling the partner's color-r arrows back along
// it must reproduce f_0.
inline VerReport check_uniqueness_16(const KRCrystal& kr) {
  VerReport rep;
  const RootData& rd = *kr.g.rd;
  if (rd.rank != 6 || (kr.r != 1 && kr.r != 6)) {
    rep.fail("check_uniqueness_16: only the minuscule columns qualify");
    return rep;
  }
  int other = kr.r == 1 ? 6 : 1;
  Weight lam{};
  lam.c[other] = kr.s;
  CrystalGraph h = gen_classical(rd, lam);

  int zcol = -1;
  std::vector<std::pair<int, int>> kpairs;
  for (auto [c, mc] : restriction_color_map(kr.r)) {
    if (c == 0)
      zcol = mc;
    else
      kpairs.push_back({c, mc});
  }
  std::vector<int> lcols, rcols;
  for (auto [c, mc] : kpairs) {
    lcols.push_back(c);
    rcols.push_back(mc);
  }
  // K-weights transported along the color map; multiplicity-free on both
  // sides, so the matching of K-hw nodes is forced
  auto lkey = [&](int v) {
    std::array<int, 8> k{};
    for (auto [c, mc] : kpairs) k[mc] = kr.g.weight(v).c[c];
    return k;
  };
  auto rkey = [&](int v) {
    std::array<int, 8> k{};
    for (auto [c, mc] : kpairs) k[mc] = h.weight(v).c[mc];
    return k;
  };

  std::map<std::array<int, 8>, int> right;
  for (int v : hw_nodes(h, rcols))
    if (!right.emplace(rkey(v), v).second) {
      rep.fail("partner K-weight repeated at " + h.label(v));
      return rep;
    }
  std::vector<std::pair<int, int>> seeds;
  for (int v : hw_nodes(kr.g, lcols)) {
    auto it = right.find(lkey(v));
    if (it == right.end()) {
      rep.fail("no partner K-hw node matches " + kr.g.label(v));
      return rep;
    }
    seeds.push_back({v, it->second});
    right.erase(it);
  }
  if (!right.empty()) {
    rep.fail("partner crystal has unmatched K-hw nodes");
    return rep;
  }

  std::vector<int> sig;
  if (!colored_rigid_iso(kr.g, h, seeds, kpairs, &sig)) {
    rep.fail("the K-weight matching does not extend to an isomorphism");
    return rep;
  }
  std::vector<int> siginv(h.size());
  for (int v = 0; v < kr.g.size(); ++v) siginv[sig[v]] = v;
  for (int v = 0; v < kr.g.size(); ++v) {
    int z = h.f(sig[v], zcol);
    int forced = z < 0 ? -1 : siginv[z];
    if (kr.g.f(v, 0) != forced) {
      rep.fail("induced 0-arrow differs at " + kr.g.label(v));
      return rep;
    }
  }
  return rep;
}

}  // namespace ecrys
