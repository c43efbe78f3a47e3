#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ecrys/compgraph.hpp"

using namespace ecrys;

namespace {

uint8_t letter(const Letters& L, const char* s) {
  return static_cast<uint8_t>(L.index_of(parse_signed_weight(s)));
}

uint8_t dual_letter(const Letters& L, const char* primal) {
  return static_cast<uint8_t>(L.index_of(-parse_signed_weight(primal)));
}

// E6 adjoint node from a dual-primal letter pair
Word adj6(const char* dual_primal, const char* primal) {
  return Word{dual_letter(Letters::e6_L6(), dual_primal),
              letter(Letters::e6_L1(), primal)};
}

// E7 adjoint node from two letters
Word adj7(const char* l1, const char* l2) {
  return Word{letter(Letters::e7_L7(), l1), letter(Letters::e7_L7(), l2)};
}

Weight fund(int i) {
  Weight w;
  w[i] = 1;
  return w;
}

std::vector<int> decompose(const CompGraph& g, const Word& w) {
  std::vector<int> mult(g.nv(), 0);
  int step = static_cast<int>(g.base.word_of[0].size());
  REQUIRE(w.size() % step == 0);
  for (std::size_t at = 0; at < w.size(); at += step) {
    Word chunk(w.begin() + at, w.begin() + at + step);
    int node = g.base.node_id(0, chunk);
    REQUIRE(node >= 0);
    auto it = std::find(g.verts.begin(), g.verts.end(), node);
    REQUIRE(it != g.verts.end());
    ++mult[it - g.verts.begin()];
  }
  return mult;
}

std::vector<std::set<std::string>> named_chains(
    const CompGraph& g, const std::vector<std::string>& name_of) {
  std::vector<std::set<std::string>> out;
  for (const auto& ch : g.maximal_chains()) {
    std::set<std::string> s;
    for (int v : ch) s.insert(name_of[v]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("adjoint chain graph for the branching away from color 6") {
  auto g = CompGraph::build(RootData::e6(), 2, {6}, false);
  REQUIRE(g.nv() == 6);
  AdjNames n = adjoint_names(g);
  CHECK(g.base.word_of[g.verts[n.u]] == adj6("-2,0,1", "-0,1"));
  CHECK(g.base.word_of[g.verts[n.a]] == adj6("-3,-6,1,5", "-0,1"));
  CHECK(g.base.word_of[g.verts[n.b]] == adj6("-3,1,6", "-0,1"));
  CHECK(g.base.word_of[g.verts[n.c]] == adj6("-0,-6,2", "-0,-5,2,6"));
  CHECK(g.base.word_of[g.verts[n.d]] == adj6("-0,-6,2", "-0,-6,2"));
  CHECK(g.base.word_of[g.verts[n.e]] == adj6("-0,-5,2,6", "-0,-6,2"));
  for (int i = 0; i < 6; ++i) CHECK(g.loop(i) == (i != n.d));
  auto chains = g.maximal_chains();
  REQUIRE(chains.size() == 2);
  std::set<std::vector<int>> got(chains.begin(), chains.end());
  std::set<std::vector<int>> want = {{n.u, n.a, n.b, n.e},
                                     {n.u, n.a, n.c, n.d, n.e}};
  CHECK(got == want);
}

TEST_CASE("adjoint chain graph for the branching away from color 1") {
  auto g = CompGraph::build(RootData::e6(), 2, {1}, false);
  REQUIRE(g.nv() == 6);
  AdjNames n = adjoint_names(g);
  CHECK(g.base.word_of[g.verts[n.u]] == adj6("-2,0,1", "-0,1"));
  CHECK(g.base.word_of[g.verts[n.a]] == adj6("-5,3", "-0,1"));
  CHECK(g.base.word_of[g.verts[n.b]] == adj6("-5,3", "-0,-1,3"));
  CHECK(g.base.word_of[g.verts[n.c]] == adj6("-0,-1,3", "-0,1"));
  CHECK(g.base.word_of[g.verts[n.d]] == adj6("-0,-1,3", "-0,-1,3"));
  CHECK(g.base.word_of[g.verts[n.e]] == adj6("-0,1", "-0,-1,3"));
}

TEST_CASE("adjoint chain graph of the seventh color, rank seven") {
  auto g = CompGraph::build(RootData::e7(), 1, {7}, false);
  REQUIRE(g.nv() == 6);
  AdjNames n = adjoint_names(g);
  CHECK(g.base.word_of[g.verts[n.u]] == adj7("-0,-7,1", "-0,7"));
  CHECK(g.base.word_of[g.verts[n.a]] == adj7("-6,2", "-0,7"));
  CHECK(g.base.word_of[g.verts[n.b]] == adj7("-6,2", "-0,-7,6"));
  CHECK(g.base.word_of[g.verts[n.c]] == adj7("-6,0,7", "-0,7"));
  CHECK(g.base.word_of[g.verts[n.d]] == adj7("-6,0,7", "-0,-7,6"));
  CHECK(g.base.word_of[g.verts[n.e]] == adj7("-7,0", "-0,-7,6"));
  for (int i = 0; i < 6; ++i) CHECK(g.loop(i) == (i != n.d));
}

TEST_CASE("level-0 chain graph doubly restricted away from colors 6 and 1") {
  auto g = CompGraph::build(RootData::e6(), 2, {1, 6}, true);
  REQUIRE(g.nv() == 11);
  auto idx = level0_names(g);
  const std::vector<std::string> tag = {"a", "b",  "b'", "c",  "c'", "c''",
                                        "d", "d'", "e",  "e'", "f"};
  std::vector<std::string> name_of(g.nv());
  for (int t = 0; t < 11; ++t) name_of[idx[t]] = tag[t];

  auto word_at = [&](int t) { return g.base.word_of[g.verts[idx[t]]]; };
  CHECK(word_at(vA) == adj6("-0,-6,2", "-0,1"));
  CHECK(word_at(vB) == adj6("-0,-6,2", "-0,-1,3"));
  CHECK(word_at(vBp) == adj6("-0,-5,2,6", "-0,1"));
  CHECK(word_at(vC) == adj6("-0,-6,2", "-0,-5,2,6"));
  CHECK(word_at(vCp) == adj6("-0,-5,2,6", "-0,-1,3"));
  CHECK(word_at(vCpp) == adj6("-0,-1,3", "-0,1"));
  CHECK(word_at(vD) == adj6("-0,-6,2", "-0,-6,2"));
  CHECK(word_at(vDp) == adj6("-0,-1,3", "-0,-1,3"));
  CHECK(word_at(vE) == adj6("-0,-5,2,6", "-0,-6,2"));
  CHECK(word_at(vEp) == adj6("-0,1", "-0,-1,3"));
  CHECK(word_at(vF) == adj6("-0,1", "-0,-6,2"));

  CHECK(g.loop(idx[vD]) == false);
  CHECK(g.loop(idx[vDp]) == false);
  for (int t = 0; t < 11; ++t)
    if (t != vD && t != vDp) CHECK(g.loop(idx[t]));

  std::set<std::pair<std::string, std::string>> edges;
  for (auto [i, j] : g.reduced) edges.emplace(name_of[i], name_of[j]);
  std::set<std::pair<std::string, std::string>> want = {
      {"a", "b"},   {"a", "b'"},  {"b", "c"},  {"b", "c'"},
      {"b'", "c'"}, {"b'", "c''"}, {"c", "d"},  {"c'", "e"},
      {"c'", "e'"}, {"c''", "d'"}, {"d", "e"},  {"d'", "e'"},
      {"e", "f"},   {"e'", "f"}};
  CHECK(edges == want);

  auto chains = named_chains(g, name_of);
  REQUIRE(chains.size() == 6);
  std::set<std::set<std::string>> got(chains.begin(), chains.end());
  std::set<std::set<std::string>> cases = {
      {"a", "b", "c", "d", "e", "f"},    {"a", "b", "c'", "e", "f"},
      {"a", "b'", "c'", "e", "f"},       {"a", "b'", "c'", "e'", "f"},
      {"a", "b", "c'", "e'", "f"},       {"a", "b'", "c''", "d'", "e'", "f"}};
  CHECK(got == cases);
}

TEST_CASE("six-vertex solver matches brute force on restricted hw words") {
  struct Setup {
    const RootData* rd;
    int fund;
    int color;            // masked color
    int cu, cb, ce;       // statistic coordinates
    int kmax;
  };
  const std::vector<Setup> setups = {
      {&RootData::e6(), 2, 6, 2, 3, 5, 3},
      {&RootData::e6(), 2, 1, 2, 5, 3, 3},
      {&RootData::e7(), 1, 7, 1, 2, 6, 2},
  };
  for (const Setup& su : setups) {
    CAPTURE(su.color);
    auto g = CompGraph::build(*su.rd, su.fund, {su.color}, false);
    AdjNames n = adjoint_names(g);
    std::vector<int> rest;
    for (int c = 1; c <= su.rd->rank; ++c)
      if (c != su.color) rest.push_back(c);
    for (int k = 0; k <= su.kmax; ++k) {
      Weight lam;
      lam[su.fund] = k;
      auto B = gen_classical(*su.rd, lam);
      auto hw = hw_nodes(B, rest);
      // one hw node per weak composition of each m <= k into 3 parts
      CHECK(static_cast<int>(hw.size()) == (k + 1) * (k + 2) * (k + 3) / 6);
      for (int v : hw) {
        const Weight& wt = B.weight(v);
        int Lu = wt[su.cu], Lb = wt[su.cb], Le = wt[su.ce];
        auto sols = weak_comp_solve(k, Lu, Lb, Le);
        REQUIRE(sols.size() == 1);
        std::vector<int> mult = decompose(g, B.word_of[v]);
        const AdjChainSol& s = sols[0];
        CHECK(mult[n.u] == s.u);
        CHECK(mult[n.a] == s.a);
        CHECK(mult[n.b] == s.b);
        CHECK(mult[n.c] == s.c);
        CHECK(mult[n.d] == s.d);
        CHECK(mult[n.e] == s.e);
        CHECK(B.phi(v, su.color) == weak_comp_phi(k, Lu, Lb, Le));
        CHECK(B.eps(v, su.color) == weak_comp_eps(k, Lu, Lb, Le));
      }
    }
  }
}

TEST_CASE("chain words enumerate restricted hw words") {
  auto g6 = CompGraph::build(RootData::e6(), 2, {6}, false);
  for (int k = 0; k <= 3; ++k) {
    Weight lam;
    lam[2] = k;
    auto B = gen_classical(RootData::e6(), lam);
    std::set<Word> brute;
    for (int v : hw_nodes(B, {1, 2, 3, 4, 5})) brute.insert(B.word_of[v]);
    std::set<Word> model;
    for (const auto& cw : g6.hw_words(k)) model.insert(cw.word);
    CHECK(model == brute);
  }
}

TEST_CASE("level-0 chain words enumerate doubly restricted hw words") {
  auto g = CompGraph::build(RootData::e6(), 2, {1, 6}, true);
  for (int k = 0; k <= 2; ++k) {
    Weight lam;
    lam[2] = k;
    auto B = gen_classical(RootData::e6(), lam);
    std::set<Word> brute;
    for (int v : hw_nodes(B, {2, 3, 4, 5}))
      if (B.weight(v)[0] >= 0) brute.insert(B.word_of[v]);
    std::set<Word> model;
    for (const auto& cw : g.hw_words(k)) model.insert(cw.word);
    CHECK(model == brute);
  }
}

TEST_CASE("eleven-vertex solver covers the admissible box and agrees") {
  for (int k = 0; k <= 4; ++k)
    for (int j = 0; j <= k; ++j)
      for (int L2 = 0; L2 <= j; ++L2)
        for (int L3 = 0; L2 + L3 <= j; ++L3)
          for (int L5 = 0; L2 + L3 + L5 <= j; ++L5) {
            auto sols = level0_solve(L2, L3, L5, j, k);
            CAPTURE(L2, L3, L5, j, k);
            REQUIRE(!sols.empty());
            for (const auto& [case_no, s] : sols) {
              CHECK(s == sols[0].second);
              int total = 0;
              for (int x : s.m) total += x;
              CHECK(total == k);
              CHECK(s.m[vD] <= 1);
              CHECK(s.m[vDp] <= 1);
            }
          }
}

TEST_CASE("eleven-vertex solver matches brute force on level-0 hw words") {
  auto g = CompGraph::build(RootData::e6(), 2, {1, 6}, true);
  auto idx = level0_names(g);
  for (int k = 0; k <= 2; ++k) {
    Weight lam;
    lam[2] = k;
    auto B = gen_classical(RootData::e6(), lam);
    Shape sh = g.word_shape(k);
    for (int v : hw_nodes(B, {2, 3, 4, 5})) {
      if (B.weight(v)[0] < 0) continue;
      const Weight& wt = B.weight(v);
      int L2 = wt[2], L3 = wt[3], L5 = wt[5];
      int p6 = B.phi(v, 6);
      int j = p6 + L2 + L3 + L5;
      CAPTURE(k, L2, L3, L5, j);
      REQUIRE(level0_admissible(L2, L3, L5, j, k));
      CHECK(B.phi(v, 1) == k - j);
      auto sols = level0_solve(L2, L3, L5, j, k);
      REQUIRE(!sols.empty());
      std::vector<int> mult = decompose(g, B.word_of[v]);
      for (const auto& [case_no, s] : sols)
        for (int t = 0; t < 11; ++t) CHECK(mult[idx[t]] == s.m[t]);
    }
  }
}
