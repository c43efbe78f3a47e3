#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "ecrys/verify.hpp"

using namespace ecrys;

namespace {

Weight fund(int i) {
  Weight w;
  w[i] = 1;
  return w;
}

std::vector<int> classical(const RootData& rd) {
  std::vector<int> out;
  for (int c = 1; c <= rd.rank; ++c) out.push_back(c);
  return out;
}

// rows (wt_2, wt_3, wt_5, phi_1, phi_6) x columns (a b b' c c' c'' d d' e e' f)
constexpr long long kStats[5][11] = {
    {-1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 1},
    {0, 1, 0, 0, 1, -1, 0, 0, 0, 1, 0},
    {0, 0, 1, -1, 1, 0, 0, 0, 1, 0, 0},
    {1, 0, 1, 0, 0, 2, 0, 1, 0, 0, 0},
    {1, 1, 0, 2, 0, 0, 1, 0, 0, 0, 0},
};

constexpr long long kKernel[6][11] = {
    {1, 0, 0, 0, 0, 0, -1, -1, 0, 0, 1},
    {0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 1},
    {0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 1},
    {0, 0, 0, 1, 0, 0, -2, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 1},
    {0, 0, 0, 0, 0, 1, 0, -2, 0, 1, 0},
};

}  // namespace

TEST_CASE("generated classical crystals are regular") {
  struct Case {
    const RootData* rd;
    Weight lam;
  };
  const std::vector<Case> cases = {
      {&RootData::e6(), fund(1)},
      {&RootData::e6(), fund(2)},
      {&RootData::e6(), fund(1) + fund(6)},
      {&RootData::e6(), fund(2) + fund(2)},
      {&RootData::e7(), fund(7)},
      {&RootData::e7(), fund(1)},
  };
  for (const auto& cs : cases) {
    auto g = gen_classical(*cs.rd, cs.lam);
    auto rep = check_regular(g, *cs.rd, classical(*cs.rd));
    INFO(rep.local.witness << rep.rank2.witness);
    CHECK(rep.local.pass);
    CHECK(rep.rank2.pass);
    CHECK(rep.agree);
  }
}

TEST_CASE("rank-2 reference crystals have the classical dimensions") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      auto ref = A2Ref::build(a, b);
      // dim of the adjacent-pair crystal with head statistics (a, b)
      CHECK(ref.size() == (a + 1) * (b + 1) * (a + b + 2) / 2);
      CHECK(ref.e(ref.hw(), 1) == -1);
      CHECK(ref.e(ref.hw(), 2) == -1);
      int phi1 = 0;
      for (int v = ref.hw(); ref.f(v, 1) >= 0; v = ref.f(v, 1)) ++phi1;
      CHECK(phi1 == a);
      GridRef grid{a, b};
      CHECK(grid.size() == (a + 1) * (b + 1));
    }
  }
}

TEST_CASE("deleting an arrow pair breaks regularity in both checkers") {
  auto g = gen_classical(RootData::e6(), fund(1));
  auto t = ArrowTable::from(g);
  int v = g.node_id(0, Word{0});  // classical highest-weight letter
  REQUIRE(v >= 0);
  int w = t.f(v, 1);
  REQUIRE(w >= 0);
  t.farr[v][1] = -1;
  t.earr[w][1] = -1;
  auto rep = check_regular(t, RootData::e6(), classical(RootData::e6()));
  CHECK_FALSE(rep.local.pass);
  CHECK_FALSE(rep.rank2.pass);
  CHECK(rep.agree);
  CHECK_FALSE(rep.local.witness.empty());
  CHECK_FALSE(rep.rank2.witness.empty());
}

TEST_CASE("a self-loop arrow is reported as a non-terminating string") {
  auto g = gen_classical(RootData::e6(), fund(1));
  auto t = ArrowTable::from(g);
  t.farr[5][3] = 5;
  auto rep = check_regular(t, RootData::e6(), classical(RootData::e6()));
  CHECK_FALSE(rep.local.pass);
  CHECK_FALSE(rep.rank2.pass);
  CHECK(rep.agree);
  CHECK(rep.local.witness.find("terminate") != std::string::npos);
}

TEST_CASE("map order checks") {
  CHECK(check_order({0, 1, 2}, 1));
  CHECK(check_order({1, 2, 0}, 3));
  CHECK_FALSE(check_order({1, 2, 0}, 1));
  CHECK_FALSE(check_order({1, 2, 0}, 2));
  CHECK(check_order({1, 0, 2}, 2));
  CHECK_FALSE(check_order({1, 0, 2}, 3));  // p^3 = p, not the identity
}

TEST_CASE("restricted hw nodes are distinguished by their K-weights") {
  for (int s = 1; s <= 3; ++s) {
    Weight lam;
    lam[1] = s;
    auto g = gen_classical(RootData::e6(), lam);
    auto rep = check_statistics_distinguish(g, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 6},
                                            {}, {});
    INFO(rep.witness);
    CHECK(rep.pass);
  }
}

TEST_CASE("adjoint-tower hw nodes are distinguished by weight plus phi_6") {
  Weight zero, l2 = fund(2), l22 = fund(2) + fund(2);
  auto g = gen_direct_sum(RootData::e6(), {zero, l2, l22});
  auto rep =
      check_statistics_distinguish(g, {1, 2, 3, 4, 5}, {2, 3, 5}, {6}, {});
  INFO(rep.witness);
  CHECK(rep.pass);
}

TEST_CASE("the third-node tower statistics collide") {
  auto g = gen_direct_sum(RootData::e6(), {fund(3), fund(6)});
  auto rep = check_statistics_distinguish(
      g, {2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6},
      {1, 2, 3, 4, 5, 6});
  CHECK_FALSE(rep.pass);
  CHECK(rep.witness.find("collision") != std::string::npos);
}

TEST_CASE("circuit machinery on a designed dependence") {
  std::vector<std::array<long long, 5>> cols(5);
  for (int t = 0; t < 5; ++t) cols[t][t] = 1;
  CHECK(matroid_circuits(cols).circuits.empty());  // no 6-subsets at all
  cols.push_back({1, 1, 0, 0, 0});
  auto cs = matroid_circuits(cols);
  REQUIRE(cs.unsigned_count == 1);
  CHECK(cs.signed_count == 2);
  CHECK(cs.circuits[0].dep == std::vector<long long>{1, 1, 0, 0, 0, -1});
}

TEST_CASE("chain-graph statistics matrix and its matroid") {
  auto g = CompGraph::build(RootData::e6(), 2, {1, 6}, true);
  auto cols = level0_stats_matrix(g);
  REQUIRE(cols.size() == 11);
  for (int t = 0; t < 11; ++t)
    for (int r = 0; r < 5; ++r) CHECK(cols[t][r] == kStats[r][t]);

  std::vector<std::vector<long long>> rows(5, std::vector<long long>(11));
  for (int r = 0; r < 5; ++r)
    for (int t = 0; t < 11; ++t) rows[r][t] = kStats[r][t];
  CHECK(int_rank(rows) == 5);  // nullity 11 - 5 = 6

  std::vector<std::vector<long long>> ker(6, std::vector<long long>(11));
  for (int r = 0; r < 6; ++r)
    for (int t = 0; t < 11; ++t) ker[r][t] = kKernel[r][t];
  CHECK(int_rank(ker) == 6);
  for (int r = 0; r < 6; ++r)
    for (int row = 0; row < 5; ++row) {
      long long acc = 0;
      for (int t = 0; t < 11; ++t) acc += kKernel[r][t] * kStats[row][t];
      CHECK(acc == 0);
    }

  auto cs = matroid_circuits(cols);
  CHECK(cs.unsigned_count == 80);
  CHECK(cs.signed_count == 160);
  std::map<int, int> by_size;
  for (const auto& c : cs.circuits) {
    int sz = 0;
    for (int s : c.sign) sz += s != 0;
    ++by_size[sz];
  }
  CHECK(by_size == std::map<int, int>{{3, 2}, {4, 17}, {5, 13}, {6, 48}});

  auto rep = check_circuits_violate_chains(cs, g);
  INFO(rep.witness);
  CHECK(rep.pass);

  for (int r = 0; r < 6; ++r) {
    std::vector<long long> dep(kKernel[r], kKernel[r] + 11);
    CHECK(violates_chain_constraints(g, dep));
  }
  // positives on one chain, nothing negative: a realizable relation shape
  std::vector<long long> control(11, 0);
  control[0] = control[1] = control[6] = 1;  // a, b, d
  CHECK_FALSE(violates_chain_constraints(g, control));
}
