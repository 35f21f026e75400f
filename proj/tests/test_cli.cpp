#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "oddred/cli.hpp"
#include "oddred/errors.hpp"
#include "oddred/json_io.hpp"

using namespace oddred;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() / ("oddred_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  void write(const std::string& name, const Json& j) const { std::ofstream(file(name)) << j.dump(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("json round trips") {
    auto h = doubled_graph(complete_graph(3));
    auto back = red_blue_from_json(graph_to_json(h));
    CHECK(back.graph().edges().size() == h.graph().edges().size());
    CHECK(back.red_edges() == h.red_edges());
    CHECK(graph_from_json(graph_to_json(complete_graph(5))).edge_count() == 10);

    auto c = build_c_induced(CInducedSpec(7, {0, 1, 2, 3, 4}));
    auto g = complete_graph(7);
    CHECK(constraint_from_json(constraint_to_json(c, g), g) == c);

    RationalVector x(10);
    x[3] = Rational(2) / 7;
    CHECK(point_from_json(point_to_json(x, complete_graph(5)), complete_graph(5)) == x);

    CHECK_THROWS_AS(graph_from_json(Json{{"n", 3}, {"edges", Json::array({Json::array({0, 5})})}}), FormatError);
    CHECK_THROWS_AS(constraint_from_json(Json{{"coeffs", {{"0-9", "1"}}}, {"rhs", "1"}}, g), FormatError);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), FormatError);
    CHECK_THROWS_AS(red_blue_from_json(graph_to_json(complete_graph(3))), FormatError);

    std::ostringstream csv;
    TransferContext ctx(complete_graph(5));
    write_matrix_csv(csv, to_matrix(canonical_transform(build_c_induced(CInducedSpec(5, {0, 1, 2})), ctx), ctx));
    CHECK(csv.str().substr(0, 31) == "row,0-,1-,2-,3-,4-\n0+,0,1,1,1,1");
  }

  TEST_CASE("certify-dominant at n = 7") {
    auto r = run({"facet", "certify-dominant", "--n", "7", "--cycle", "0,1,2,3,4"});
    CHECK(r.code == kExitOk);
    auto rep = r.report();
    CHECK(rep["command"] == "facet certify-dominant");
    CHECK(rep["outcome"] == "certified");
    CHECK(rep["certificate"]["face_dim"] == 20);
    CHECK(rep["inputs_digest"].get<std::string>().size() == 64);
    CHECK_FALSE(rep.contains("seed"));
  }

  TEST_CASE("counterexample verification") {
    auto r = run({"label", "counterexample", "--verify"});
    CHECK(r.code == kExitOk);
    auto v = r.report()["certificate"]["verify"];
    CHECK(v["y_in_Q"] == true);
    CHECK(v["y_in_P"] == false);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"solve", "--graph", "missing.json"}).code == kExitDataFormat);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"facet"}).code == kExitUsage);
    CHECK(run({"facet", "certify-dominant", "--n", "6", "--cycle", "0,1,2,3"}).code == kExitUsage);
    CHECK(run({"facet", "certify-dominant", "--n", "x"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);

    TempDir dir;
    dir.write("bad.json", Json{{"n", 2}});
    CHECK(run({"solve", "--graph", dir.file("bad.json")}).code == kExitDataFormat);
    std::ofstream(dir.file("garbage.json")) << "{not json";
    CHECK(run({"solve", "--graph", dir.file("garbage.json")}).code == kExitDataFormat);

    Json star{{"n", 4}, {"bipartition", {{0}, {1, 2, 3}}}, {"edges", {{0, 1}, {0, 2}, {0, 3}}}, {"red", Json::array()}};
    dir.write("star.json", star);
    CHECK(run({"solve", "--graph", dir.file("star.json")}).code == kExitNoPerfectMatching);
    Json blue{{"n", 4}, {"bipartition", {{0, 1}, {2, 3}}}, {"edges", {{0, 2}, {1, 3}}}, {"red", Json::array()}};
    dir.write("blue.json", blue);
    auto nb = run({"solve", "--graph", dir.file("blue.json")});
    CHECK(nb.code == kExitNoOddRed);
    CHECK(nb.report()["outcome"] == "no_odd_red_matching");

    Json k22{{"n", 4}, {"bipartition", {{0, 1}, {2, 3}}}, {"edges", {{0, 2}, {0, 3}, {1, 2}, {1, 3}}}, {"red", {{0, 2}}}};
    dir.write("k22.json", k22);
    CHECK(run({"bimodular", "check", "--graph", dir.file("k22.json")}).code == kExitCertificationFailure);
    CHECK(run({"bimodular", "check", "--graph", dir.file("k22.json"), "--scope", "nonnegativity"}).code == kExitOk);
    CHECK(run({"bimodular", "check", "--graph", dir.file("k22.json"), "--scope", "other"}).code == kExitUsage);
  }

  TEST_CASE("artifacts flow between subcommands") {
    TempDir dir;
    auto built = run({"facet", "build-c-induced", "--n", "5", "--cycle", "0,1,2", "--out", dir.file("c.json")});
    REQUIRE(built.code == kExitOk);
    auto canonical = run({"transfer", "canonical", "--constraint", dir.file("c.json"), "--out", dir.file("t.json")});
    REQUIRE(canonical.code == kExitOk);
    auto direct = run({"transfer", "canonical", "--n", "5", "--cycle", "0,1,2"});
    CHECK(direct.report()["certificate"] == canonical.report()["certificate"]);

    auto cert = run({"transfer", "certify", "--constraint", dir.file("t.json")});
    CHECK(cert.code == kExitOk);
    CHECK(cert.report()["certificate"]["polytope_dim"] == 16);
    CHECK(cert.report()["certificate"]["face_dim"] == 15);
    CHECK(run({"transfer", "certify", "--graph", dir.file("t.json"), "--constraint", dir.file("t.json")}).code == kExitOk);
    CHECK(run({"complexity", "check", "--constraint", dir.file("t.json")}).code == kExitOk);
    CHECK(run({"bimodular", "translate", "--constraint", dir.file("t.json"), "--c", "2"}).code == kExitOk);

    auto reduced = run({"complexity", "reduce", "--n", "7", "--cycle", "0,1,2,3,4", "--verify", "--out", dir.file("r.json")});
    CHECK(reduced.code == kExitOk);
    CHECK(reduced.report()["certificate"]["same_face"] == true);
    CHECK(reduced.report()["certificate"]["distinct"] == 15);
    auto rcheck = run({"complexity", "check", "--constraint", dir.file("r.json")});
    CHECK(rcheck.code == kExitOk);
    CHECK(rcheck.report()["certificate"]["report"]["distinct"] == 15);

    auto ce = run({"label", "counterexample", "--out", dir.file("ce.json")});
    CHECK(ce.code == kExitOk);
    auto member = run({"label", "membership", "--graph", dir.file("ce.json"), "--point", dir.file("ce.json")});
    CHECK(member.report()["outcome"] == "inside");
    CHECK(run({"solve", "--graph", dir.file("ce.json")}).code == kExitOk);
    CHECK(run({"bimodular", "build", "--graph", dir.file("ce.json")}).report()["certificate"]["rows"] == 11);

    dir.write("k4.json", graph_to_json(complete_graph(4)));
    auto red = run({"reduce", "maxcut", "--graph", dir.file("k4.json"), "--k", "4", "--verify", "--out", dir.file("red.json")});
    CHECK(red.code == kExitOk);
    CHECK(red.report()["certificate"]["alpha"] == "1/6");
    auto violated = run({"label", "membership", "--graph", dir.file("red.json"), "--point", dir.file("red.json"), "--threads", "2"});
    CHECK(violated.report()["outcome"] == "label_violation");
    CHECK(run({"reduce", "maxcut", "--graph", dir.file("k4.json"), "--k", "9"}).code == kExitUsage);
  }

  TEST_CASE("reports are deterministic") {
    std::vector<std::string> search{"complexity", "search", "--n", "9", "--cycle", "0,1,2,3,4,5,6", "--seed", "5",
                                    "--iterations", "300"};
    auto a = run(search);
    auto b = run(search);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.report()["seed"] == 5);
    auto other = search;
    other[7] = "6";
    CHECK(run(other).report()["inputs_digest"] != a.report()["inputs_digest"]);

    std::vector<std::string> sampled{"complexity", "check", "--n", "9", "--cycle", "0,1,2,3,4,5,6", "--samples", "200"};
    auto s1 = run(sampled);
    CHECK(s1.code == kExitOk);
    CHECK(s1.out == run(sampled).out);
    CHECK(s1.report()["certificate"]["samples"]["violations"] == 0);
  }
}
