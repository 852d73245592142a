#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <stabcv/cli.hpp>
#include <stabcv/error.hpp>
#include <stabcv/json_io.hpp>

using namespace stabcv;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stabcv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("stabcv_test_" + name);
}

}  // namespace

TEST_CASE("fpoly prints the last F-polynomial") {
  const Outcome o = cli({"fpoly", "--preset", "kronecker", "--steps", "2", "--format", "text"});
  CHECK(o.code == 0);
  CHECK(o.out == "1 + 2*y0 + y0^2 + y0^2*y1\n");

  const Outcome all = cli({"fpoly", "--preset", "conifold", "--steps", "2", "--all"});
  CHECK(all.out == "F_0 = 1\nF_1 = 1 + y0\nF_2 = 1 + 2*y0 + y0^2 + y0^2*y1 + 2*y0^3*y1 + y0^4*y1\n");

  const Outcome j = cli({"fpoly", "--preset", "f0", "--steps", "4", "--format", "json"});
  CHECK(polynomial_from_json(Json::parse(j.out)) ==
        parse_polynomial("y0^2*y1^2*y3 + 2*y0*y1^2*y3 + y1^2*y3 + y1^2 + 2*y1 + 1", 4));
}

TEST_CASE("dispatch is deterministic") {
  CommandConfig c;
  c.command = Command::Stabilize;
  c.preset = "conifold";
  c.steps = 10;
  c.degree = 6;
  const CommandResult a = dispatch(c), b = dispatch(c);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("stabilize reports the first stable step") {
  const Outcome o = cli({"stabilize", "--preset", "conifold", "--steps", "16", "--degree", "5", "--period", "2",
                         "--window", "3"});
  REQUIRE(o.code == 0);
  CHECK(o.out.starts_with("degree_cap=5 period=2 window=3 horizon=16"));
  const auto at = o.out.find("\n2*y0^2*y1  first_stable_step=");
  REQUIRE(at != std::string::npos);
  const int step = std::stoi(o.out.substr(at + std::string("\n2*y0^2*y1  first_stable_step=").size()));
  CHECK(step <= 8);

  const Outcome j = cli({"stabilize", "--preset", "kronecker", "--steps", "12", "--degree", "5",
                         "--normalize-parity", "--format", "json"});
  REQUIRE(j.code == 0);
  const StableReport r = stable_report_from_json(Json::parse(j.out), 2);
  CHECK(r.period == 1);
  CHECK(r.series() == parse_polynomial("1 + y0 + 2*y0^2*y1 + 3*y0^3*y1^2", 2));
}

TEST_CASE("mutate and quiver files") {
  const Outcome m = cli({"mutate", "--preset", "kronecker", "--steps", "1"});
  CHECK(m.out.find("C=[[1, -2], [0, -1]]") != std::string::npos);

  const auto path = temp_file("quiver.json");
  {
    std::ofstream f(path);
    f << R"({"n": 2, "arrows": [[0, 0, 1, 0], [2, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]})";
  }
  const Outcome q = cli({"fpoly", "--quiver", path.string(), "--sequence", "0,1", "--steps", "2"});
  CHECK(q.code == 0);
  CHECK(q.out == "1 + 2*y0 + y0^2 + y0^2*y1\n");

  const Outcome t = cli({"mutate", "--quiver", path.string(), "--sequence", "0,1", "--steps", "3", "--format",
                         "json"});
  CHECK(trace_from_json(Json::parse(t.out)).steps() == 3);

  const Outcome v = cli({"verify", "--quiver", path.string(), "--sequence", "0,1", "--steps", "6"});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS mutation is an involution") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("pyramid subcommand") {
  CHECK(cli({"pyramid", "--shape", "ad2", "--k", "2"}).out ==
        "1 + 2*y0 + y0^2 + y0^2*y1 + 2*y0^3*y1 + y0^4*y1\n");
  CHECK(cli({"pyramid", "--limit", "S", "--degree", "7"}).out ==
        "1 + y0 + 2*y0^2*y1 + 3*y0^3*y1^2 + 4*y0^4*y1^3\n");
  CHECK(cli({"pyramid", "--limit", "T", "--degree", "5"}).out ==
        "1 + y0 + 2*y0^2*y1 + 2*y0^3*y1 + 3*y0^3*y1^2\n");
  const Outcome s = cli({"pyramid", "--shape", "row", "--k", "1", "--simple"});
  CHECK(s.out.starts_with("simple partitions: 2\n"));
  const Outcome d = cli({"pyramid", "--shape", "ad2", "--k", "3", "--dump-shape"});
  CHECK(Json::parse(d.out)["stones"].size() == 14);
}

TEST_CASE("verify a preset") {
  const Outcome o = cli({"verify", "--preset", "kronecker", "--max-k", "8"});
  CHECK(o.code == 0);
  CHECK(o.out.find("5/5 checks passed") != std::string::npos);
  const Outcome j = cli({"verify", "--preset", "conifold", "--max-k", "6", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(Json::parse(j.out)["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);
  CHECK(cli({"fpoly", "--preset", "kronecker"}).code == 2);                          // no steps
  CHECK(cli({"fpoly", "--preset", "nope", "--steps", "2"}).code == 2);
  CHECK(cli({"fpoly", "--preset", "kronecker", "--quiver", "x.json", "--steps", "2"}).code == 2);
  CHECK(cli({"fpoly", "--quiver", "/nonexistent.json", "--sequence", "0", "--steps", "1"}).code == 2);
  CHECK(cli({"fpoly", "--preset", "kronecker", "--steps", "2", "--sequence", "0,5"}).code == 2);
  CHECK(cli({"fpoly", "--preset", "kronecker", "--steps", "2", "--subsample", "1:0"}).code == 2);
  CHECK(cli({"fpoly", "--preset", "kronecker", "--steps", "999"}).code == 2);
  CHECK(cli({"stabilize", "--preset", "kronecker", "--steps", "2", "--window", "3"}).code == 2);
  CHECK(cli({"pyramid", "--shape", "ad2", "--k", "0"}).code == 2);
  CHECK(cli({"pyramid", "--shape", "ad2", "--k", "8"}).code == 2);
  CHECK(cli({"pyramid", "--limit", "Q"}).code == 2);
  CHECK(cli({"fpoly", "--preset", "kronecker", "--steps", "2", "--format", "xml"}).code == 2);
  CHECK(cli({"verify", "--preset", "kronecker", "--max-k", "0"}).code == 2);

  const Outcome bad = cli({"fpoly", "--preset", "kronecker", "--steps", "2", "--sequence", "0,5"});
  CHECK(bad.err.starts_with("error: "));
  CHECK(bad.out.empty());
}

TEST_CASE("parsers") {
  CHECK(parse_subsample("2:2") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK_THROWS_AS(parse_subsample("2"), InvalidInput);
  CHECK_THROWS_AS(parse_subsample("a:1"), InvalidInput);
  CHECK(parse_sequence("0,1,2,3") == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(parse_sequence("0,-1"), InvalidInput);
  CHECK_THROWS_AS(parse_sequence(""), InvalidInput);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = temp_file("out.txt");
  const Outcome o = cli({"fpoly", "--preset", "kronecker", "--steps", "1", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1 + y0");
  std::filesystem::remove(path);
}
