#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "mixsign/cli.hpp"

using namespace mixsign;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string graphs = MIXSIGN_DATA_DIR "/graphs/";
const std::string malformed = MIXSIGN_TEST_DATA_DIR "/malformed/";

}  // namespace

TEST_CASE("analyze") {
  Run r = run({"analyze", graphs + "e10.json"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.empty());
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["kind"] == "PseudoAnosovCertified");
  Run again = run({"analyze", graphs + "e10.json"});
  CHECK(again.out == r.out);

  Run csv = run({"analyze", graphs + "c4_cyclic.json", "--csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("vertices,edges,", 0) == 0);

  Run fill = run({"analyze", graphs + "hexagon_bipartite.json", "--closure", "1"});
  CHECK(nlohmann::json::parse(fill.out)["closure"]["boundary_count"] == 1);
  CHECK(run({"analyze", graphs + "hexagon_bipartite.json", "--closure", "5"}).code == kExitInput);

  Run meta = run({"analyze", graphs + "e10.json", "--meta"});
  CHECK(nlohmann::json::parse(meta.out)["meta"]["generated_at"].get<std::string>().size() == 20);
  CHECK_FALSE(j.contains("meta"));
  Run meta_csv = run({"analyze", graphs + "e10.json", "--csv", "--meta"});
  CHECK(meta_csv.out.find(",generated_at\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"analyze", graphs + "missing.json"}).code == kExitInput);
  for (const char* f : {"trailing_comma.json", "truncated.json", "empty.json", "wrong_shape.json", "loop_edge.json",
                        "duplicate_edge.json", "bad_sign.json", "unknown_vertex.json", "fatgraph_not_permutation.json",
                        "no_vertices.json"}) {
    CAPTURE(f);
    Run r = run({"analyze", malformed + f});
    CHECK(r.code == kExitInput);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
  Run bad = run({"analyze", malformed + "trailing_comma.json"});
  CHECK(bad.err.find("line 2, column 24") != std::string::npos);
  CHECK(run({"house", "--coeffs", "1"}).code == kExitInput);
  CHECK(run({"house", "--coeffs", "1,a"}).code == kExitInput);
  CHECK(run({"house", "--coeffs", "1,1,0,-1,-1,-1,-1,-1,0,1,1", "--tol", "1e-40"}).code == kExitCertification);
  CHECK(run({"house", "--coeffs", "1,-3,1", "--tol", "-1"}).code == kExitInput);
}

TEST_CASE("unknown keys warn but succeed") {
  Run r = run({"analyze", MIXSIGN_TEST_DATA_DIR "/warn/unknown_key.json"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.err.find("'comment'") != std::string::npos);
}

TEST_CASE("house") {
  Run r = run({"house", "--coeffs", "1,-1,-1,-1,1"});  // LT_2
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["house"]["value"].get<double>() == doctest::Approx(1.722083806).epsilon(1e-9));
  CHECK(j["outside_count"] == 1);
}

TEST_CASE("families") {
  Run lt = run({"family", "lt", "--gmin", "2", "--gmax", "6"});
  REQUIRE(lt.code == kExitOk);
  auto j = nlohmann::json::parse(lt.out);
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][0]["house"].get<double>() == doctest::Approx(1.722083806).epsilon(1e-9));
  CHECK(run({"family", "lt", "--gmin", "2", "--gmax", "6"}).out == lt.out);

  Run ab = run({"family", "lt-ab", "--kmin", "2", "--kmax", "2", "--csv"});
  CHECK(ab.out.find("\n2,1.17628081826,") != std::string::npos);

  Run tw = run({"family", "twist", "--mmin", "2", "--mmax", "4"});
  REQUIRE(tw.code == kExitOk);
  for (const auto& row : nlohmann::json::parse(tw.out)["rows"]) CHECK(row["house"].get<double>() == 1.0);

  Run gm = run({"family", "gamma-mn", "--m", "2", "--n", "3"});
  REQUIRE(gm.code == kExitOk);
  CHECK(nlohmann::json::parse(gm.out)["rows"].size() == 1);
  CHECK(run({"family", "gamma-mn", "--m", "2"}).code == kExitInput);
  CHECK(run({"family", "gamma-mn", "--size", "3", "--csv"}).out.find('\n') != std::string::npos);

  Run tail = run({"family", "tail", "--graph", graphs + "e8.json", "--vertex", "v1", "--kmin", "1", "--kmax", "3"});
  REQUIRE(tail.code == kExitOk);
  auto rows = nlohmann::json::parse(tail.out)["rows"];
  CHECK(rows.size() == 3);
  // E_10 is the tail of length 2.
  CHECK(rows[1]["house"].get<double>() == doctest::Approx(1.17628081826).epsilon(1e-10));
  CHECK(run({"family", "tail", "--graph", graphs + "e8.json", "--vertex", "nope"}).code == kExitInput);
  CHECK(run({"family", "nosuch"}).code == kExitInput);
  CHECK(run({"family", "lt", "--gmin", "5", "--gmax", "2"}).code == kExitInput);
}
