#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ecrys/letters.hpp"
#include "ecrys/serialize.hpp"

using namespace ecrys;

namespace {
std::string data_path(const char* name) {
  return std::string(ECRYS_DATA_DIR) + "/" + name;
}

// Compare a generated minuscule alphabet against a fixture, arrow for arrow.
void check_against_fixture(const Letters& l, const char* file, int narrows) {
  GraphDoc doc = load_graph_doc(data_path(file));
  REQUIRE(doc.nodes.size() == static_cast<std::size_t>(l.size()));
  std::set<Weight> have, want;
  for (int b = 0; b < l.size(); ++b) have.insert(l.wt[b]);
  for (const auto& n : doc.nodes) want.insert(n);
  CHECK(have == want);
  REQUIRE(doc.arrows.size() == static_cast<std::size_t>(narrows));
  int generated_arrows = 0;
  for (int b = 0; b < l.size(); ++b)
    for (int c = 1; c <= l.rd->rank; ++c)
      if (l.f(b, c) >= 0) ++generated_arrows;
  CHECK(generated_arrows == narrows);
  for (const auto& a : doc.arrows) {
    int s = l.index_of(a.src), d = l.index_of(a.dst);
    REQUIRE(s >= 0);
    REQUIRE(d >= 0);
    CHECK(l.f(s, a.color) == d);
    CHECK(l.e(d, a.color) == s);
  }
}
}  // namespace

TEST_CASE("B(Λ1) of E6 matches its fixture") {
  check_against_fixture(Letters::e6_L1(), "minuscule_e6.graph", 36);
}

TEST_CASE("B(Λ7) of E7 matches its fixture") {
  check_against_fixture(Letters::e7_L7(), "minuscule_e7.graph", 84);
}

TEST_CASE("dual alphabet reverses arrows and negates weights") {
  const auto& p = Letters::e6_L1();
  const auto& d = Letters::e6_L6();
  REQUIRE(d.size() == 27);
  for (int b = 0; b < p.size(); ++b) {
    CHECK(d.wt[b] == -p.wt[b]);
    for (int c = 1; c <= 6; ++c) {
      CHECK(d.f(b, c) == p.e(b, c));
      CHECK(d.e(b, c) == p.f(b, c));
    }
  }
}

TEST_CASE("B(Λ6) built as an orbit is isomorphic to the dual of B(Λ1)") {
  const auto& d = Letters::e6_L6();
  Letters orbit = Letters::make_orbit(RootData::e6(), 6);
  REQUIRE(orbit.size() == d.size());
  // weights coincide as sets, and arrows agree under the weight matching
  for (int b = 0; b < orbit.size(); ++b) {
    int m = d.index_of(orbit.wt[b]);
    REQUIRE(m >= 0);
    for (int c = 1; c <= 6; ++c) {
      int fb = orbit.f(b, c);
      int fm = d.f(m, c);
      if (fb < 0) {
        CHECK(fm < 0);
      } else {
        REQUIRE(fm >= 0);
        CHECK(d.wt[fm] == orbit.wt[fb]);
      }
    }
  }
}

TEST_CASE("letter statistics and levels") {
  const auto& l = Letters::e6_L1();
  const auto& rd = RootData::e6();
  for (int b = 0; b < l.size(); ++b) {
    CHECK(rd.level(l.wt[b]) == 0);
    for (int c = 1; c <= 6; ++c) {
      CHECK(l.phi(b, c) - l.eps(b, c) == l.wt[b][c]);
      CHECK((l.f(b, c) >= 0) == (l.phi(b, c) == 1));
      CHECK((l.e(b, c) >= 0) == (l.eps(b, c) == 1));
    }
  }
}

TEST_CASE("Sage-style letter labels") {
  const auto& l = Letters::e6_L1();
  const auto& rd = RootData::e6();
  // highest weight letter of B(Λ1) prints [1]
  Weight hw;
  hw[1] = 1;
  hw = rd.with_level0(hw);
  CHECK(l.label(l.index_of(hw)) == "[1]");
  // lowest letter prints [-6]
  Weight low;
  low[6] = -1;
  low = rd.with_level0(low);
  CHECK(l.label(l.index_of(low)) == "[-6]");
  // the letter of weight Λ0+Λ1-Λ2 prints [-2, 1]
  CHECK(l.label(l.index_of(parse_signed_weight("0,1,-2"))) == "[-2, 1]");
  // its dual prints [2, -1]
  const auto& d = Letters::e6_L6();
  CHECK(d.label(d.index_of(parse_signed_weight("-0,-1,2"))) == "[2, -1]");
  // dual of the highest letter prints [-1]
  CHECK(d.label(d.index_of(parse_signed_weight("0,-1"))) == "[-1]");
}

TEST_CASE("f-reachability is a partial order refinement") {
  const auto& l = Letters::e6_L1();
  int n = l.size();
  // reflexive
  for (int b = 0; b < n; ++b) CHECK(l.reaches(b, b));
  // hw reaches everything, nothing reaches above it
  Weight hw = RootData::e6().with_level0([] {
    Weight w;
    w[1] = 1;
    return w;
  }());
  int top = l.index_of(hw);
  for (int b = 0; b < n; ++b) {
    CHECK(l.reaches(top, b));
    if (b != top) CHECK_FALSE(l.reaches(b, top));
  }
}

TEST_CASE("fixture parser round-trips canonically") {
  GraphDoc doc = load_graph_doc(data_path("minuscule_e6.graph"));
  std::string once = emit_graph_doc(doc);
  std::istringstream in(once);
  GraphDoc again = parse_graph_doc(in);
  CHECK(emit_graph_doc(again) == once);
  CHECK(again.nodes.size() == doc.nodes.size());
  CHECK(again.arrows.size() == doc.arrows.size());
}
