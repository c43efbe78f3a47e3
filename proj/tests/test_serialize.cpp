#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ecrys/affine.hpp"
#include "ecrys/serialize.hpp"

using namespace ecrys;

namespace {

int count_sub(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

void require_roundtrip(const Document& d) {
  std::string s = json_str(d);
  Document back = document_from_json(s);
  REQUIRE(back == d);
  REQUIRE(json_str(back) == s);
}

}  // namespace

TEST_CASE("json documents round-trip to identity") {
  const RootData& rd = RootData::e6();
  Weight l1{};
  l1[1] = 1;
  require_roundtrip(document_from_graph(gen_classical(rd, l1), false));

  KRCrystal kr = kr_crystal(rd, 1, 1);
  require_roundtrip(document_from_graph(kr.g, true, kr.r, kr.s));

  require_roundtrip(
      document_from_compgraph(CompGraph::build(rd, 2, {6}, false)));
}

TEST_CASE("affine document carries header, letters, weights, zero edges") {
  const RootData& rd = RootData::e6();
  KRCrystal kr = kr_crystal(rd, 1, 1);
  Document d = document_from_graph(kr.g, true, 1, 1);
  CHECK(d.kind == "affine");
  CHECK(d.rank == 6);
  CHECK(d.index_set == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(d.r == 1);
  CHECK(d.s == 1);
  REQUIRE(d.nodes.size() == 27);
  CHECK(d.nodes[0].letters == std::vector<std::vector<int>>{{1}});
  CHECK(d.nodes[0].weight == std::vector<int>{-1, 1, 0, 0, 0, 0, 0});
  int zero_edges = 0;
  for (const auto& e : d.edges)
    if (e.color == 0) ++zero_edges;
  CHECK(zero_edges == 6);
  CHECK(d.edges.size() == 36 + 6);

  // display convention: the two-slot generator prints dual letter first
  Weight l2{};
  l2[2] = 1;
  Document d2 = document_from_graph(gen_classical(rd, l2), false);
  CHECK(d2.nodes[0].letters ==
        std::vector<std::vector<int>>{{2, -1}, {1}});
  CHECK(d2.nodes[0].label == "[[[2, -1], [1]]]");
}

TEST_CASE("compgraph document renders loops and reduced arrows") {
  const RootData& rd = RootData::e6();
  Document d = document_from_compgraph(CompGraph::build(rd, 2, {6}, false));
  REQUIRE(d.nodes.size() == 6);
  CHECK(d.edges.size() == 6);
  int loops = 0;
  for (const auto& n : d.nodes) loops += n.loop ? 1 : 0;
  CHECK(loops == 5);
  CHECK(d.fund == 2);
  CHECK(d.J == std::vector<int>{6});
  CHECK_FALSE(d.level0);

  std::string dot = to_dot(d);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_sub(dot, " -> ") == 6);
  CHECK(count_sub(dot, "peripheries=2") == 5);
}

TEST_CASE("dot output is edge-count-complete") {
  const RootData& rd = RootData::e6();
  KRCrystal kr = kr_crystal(rd, 1, 1);
  Document d = document_from_graph(kr.g, true, 1, 1);
  std::string dot = to_dot(d);
  CHECK(count_sub(dot, " -> ") == static_cast<int>(d.edges.size()));
  CHECK(count_sub(dot, "[label=\"") == static_cast<int>(d.nodes.size()));
  CHECK(dot.back() == '\n');
  CHECK(count_sub(dot, "{") == count_sub(dot, "}"));
}

TEST_CASE("malformed documents are rejected") {
  const RootData& rd = RootData::e6();
  Weight l1{};
  l1[1] = 1;
  Document d = document_from_graph(gen_classical(rd, l1), false);
  nlohmann::ordered_json j = to_json(d);
  j["nodes"][1]["id"] = 7;
  CHECK_THROWS(document_from_json(j.dump()));
  nlohmann::ordered_json k = to_json(d);
  k["edges"][0]["dst"] = 99;
  CHECK_THROWS(document_from_json(k.dump()));
}
