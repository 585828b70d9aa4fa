#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "mixsign/error.hpp"
#include "mixsign/graph.hpp"
#include "mixsign/graph_io.hpp"
#include "oracles.hpp"

using namespace mixsign;

namespace {

ErrorCode code_of(const RawGraph& raw) {
  try {
    MixedSignGraph::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected validation error");
  return ErrorCode::InternalInconsistency;
}

RawGraph triangle() {
  RawGraph raw;
  raw.vertices = {{"a", 1}, {"b", -1}, {"c", 1}};
  raw.edges = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  return raw;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validation") {
  MixedSignGraph g = MixedSignGraph::validate(triangle());
  CHECK(g.size() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(g.edges()[1] == Edge{0, 2});
  CHECK(g.adjacent(2, 0));
  CHECK(g.sign(1) == -1);
  CHECK(g.index_of("c") == 2u);
  CHECK_FALSE(g.index_of("z"));
  CHECK(g.rotation(1) == std::vector<std::size_t>{0, 2});

  RawGraph r = triangle();
  r.vertices[1].sign = 0;
  CHECK(code_of(r) == ErrorCode::BadSign);
  r = triangle();
  r.edges.push_back({"a", "a"});
  CHECK(code_of(r) == ErrorCode::LoopEdge);
  r = triangle();
  r.edges.push_back({"b", "a"});
  CHECK(code_of(r) == ErrorCode::DuplicateEdge);
  r = triangle();
  r.edges.push_back({"a", "q"});
  CHECK(code_of(r) == ErrorCode::UnknownVertex);
  r = triangle();
  r.vertices.push_back({"a", 1});
  CHECK(code_of(r) == ErrorCode::DuplicateVertex);
  r = triangle();
  r.fatgraph = std::map<std::string, std::vector<std::string>>{{"a", {"b"}}};
  CHECK(code_of(r) == ErrorCode::FatgraphNotPermutation);
  r.fatgraph = std::map<std::string, std::vector<std::string>>{{"a", {"b", "b"}}};
  CHECK(code_of(r) == ErrorCode::FatgraphNotPermutation);
  // Two neighbors admit only one cyclic order.
  r.fatgraph = std::map<std::string, std::vector<std::string>>{{"a", {"c", "b"}}};
  CHECK(MixedSignGraph::validate(r).rotation(0) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("rotations are stored up to cyclic shift") {
  RawGraph raw;
  raw.vertices = {{"h", 1}, {"x", 1}, {"y", 1}, {"z", 1}};
  raw.edges = {{"h", "x"}, {"h", "y"}, {"h", "z"}};
  raw.fatgraph = std::map<std::string, std::vector<std::string>>{{"h", {"z", "x", "y"}}};
  RawGraph shifted = raw;
  shifted.fatgraph = std::map<std::string, std::vector<std::string>>{{"h", {"x", "y", "z"}}};
  CHECK(MixedSignGraph::validate(raw) == MixedSignGraph::validate(shifted));
  RawGraph reversed = raw;
  reversed.fatgraph = std::map<std::string, std::vector<std::string>>{{"h", {"z", "y", "x"}}};
  CHECK_FALSE(MixedSignGraph::validate(raw) == MixedSignGraph::validate(reversed));
}

TEST_CASE("JSON round trip on random graphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    MixedSignGraph g = oracle::random_graph(rng, 1 + t % 12, 0.35);
    std::string text = serialize_graph(g);
    MixedSignGraph back = load_graph_json(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
  }
}

TEST_CASE("parse diagnostics") {
  std::vector<std::string> warnings;
  load_graph_json(R"({"vertices":[{"id":"a","sign":1}],"edges":[],"note":1})", &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("'note'") != std::string::npos);

  try {
    load_graph_json("{\"vertices\": [\n  {\"id\": \"a\", \"sign\": 1},\n  ]\n}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3, column 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_graph_json("[]"), Error);
  CHECK_THROWS_AS(load_graph_json(R"({"vertices":[{"id":1,"sign":1}]})"), Error);
  CHECK_THROWS_AS(load_graph_json(R"({"vertices":[{"id":"a","sign":"+"}]})"), Error);
  CHECK_THROWS_AS(load_graph_json(R"({"vertices":[{"id":"a","sign":1}],"edges":[["a"]]})"), Error);
}

TEST_CASE("malformed corpus") {
  const std::string dir = MIXSIGN_TEST_DATA_DIR "/malformed/";
  const std::vector<std::pair<std::string, ErrorCode>> cases = {
      {"trailing_comma.json", ErrorCode::ParseError},     {"truncated.json", ErrorCode::ParseError},
      {"empty.json", ErrorCode::ParseError},              {"wrong_shape.json", ErrorCode::ParseError},
      {"loop_edge.json", ErrorCode::LoopEdge},            {"duplicate_edge.json", ErrorCode::DuplicateEdge},
      {"bad_sign.json", ErrorCode::BadSign},              {"unknown_vertex.json", ErrorCode::UnknownVertex},
      {"fatgraph_not_permutation.json", ErrorCode::FatgraphNotPermutation},
  };
  for (const auto& [file, code] : cases) {
    CAPTURE(file);
    try {
      load_graph_json(slurp(dir + file));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  }
}

TEST_CASE("bipartition and reordering") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    MixedSignGraph g = oracle::random_graph(rng, 2 + t % 10, 0.3);
    auto parts = bipartition(g);
    // Odd cycle check by brute force: bipartite iff A has no closed odd walks,
    // i.e. trace of A^k vanishes for odd k <= n.
    IntMatrix a = adjacency_matrix(g), p = a;
    bool odd_walk = false;
    for (std::size_t k = 1; k <= g.size(); k += 2) {
      mpz_class tr = 0;
      for (std::size_t i = 0; i < g.size(); ++i) tr += p(i, i);
      odd_walk |= tr != 0;
      p = p * a * a;
    }
    CHECK(parts.has_value() == !odd_walk);
    if (!parts) {
      CHECK_THROWS_AS(bipartite_ordering(g), Error);
      continue;
    }
    for (const auto& e : g.edges()) {
      bool a_first = std::find(parts->first.begin(), parts->first.end(), e.a) != parts->first.end();
      bool b_first = std::find(parts->first.begin(), parts->first.end(), e.b) != parts->first.end();
      CHECK(a_first != b_first);
    }
    MixedSignGraph b = bipartite_ordering(g);
    CHECK(b.size() == g.size());
    CHECK(b.edges().size() == g.edges().size());
    // No edge inside the first block.
    for (const auto& e : b.edges()) CHECK(!(e.b < parts->first.size()));
  }
  auto perm = oracle::random_permutation(rng, 5);
  MixedSignGraph g = oracle::random_graph(rng, 5, 0.5);
  MixedSignGraph r = reorder(g, perm);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(r.id(k) == g.id(perm[k]));
    CHECK(r.sign(k) == g.sign(perm[k]));
    for (std::size_t l = 0; l < 5; ++l) CHECK(r.adjacent(k, l) == g.adjacent(perm[k], perm[l]));
  }
  CHECK_THROWS_AS(reorder(g, {0, 0, 1, 2, 3}), Error);
  CHECK(with_signs(g, {1, 1, -1, -1, 1}).signs() == std::vector<int>{1, 1, -1, -1, 1});
  CHECK_THROWS_AS(with_signs(g, {1}), Error);
}

TEST_CASE("connected components") {
  RawGraph raw;
  raw.vertices = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}};
  raw.edges = {{"a", "c"}};
  MixedSignGraph g = MixedSignGraph::validate(raw);
  auto comps = connected_components(g);
  CHECK(comps == std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(MixedSignGraph::validate(triangle())));
}
