#include "../tools/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = incmax::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp_dir() {
  const char* env = std::getenv("INCMAX_TEST_TMP");
  auto dir = std::filesystem::path(env ? env : std::filesystem::temp_directory_path().string()) / "cli_tmp";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run on G_2 with greedy") {
  const auto r = call({"run", "--gen", "gk:k=2", "--alg", "greedy", "--kmax", "4"});
  CHECK(r.code == incmax::cli::kOk);
  CHECK(r.out.find("k,alg_value,opt_value,ratio\n") != std::string::npos);
  CHECK(r.out.find("4,30,64,2.13333333\n") != std::string::npos);
  CHECK(r.out.find("# worst_ratio=2.13333333 argmax_k=4 bound=none") != std::string::npos);
}

TEST_CASE("run with a greedy bound that fails") {
  const auto r = call({"run", "--gen", "knapsack_trap:k=4", "--alg", "greedy", "--alpha", "1", "--kmax", "4"});
  CHECK(r.code == incmax::cli::kBoundViolated);
  CHECK(r.out.find("bound_satisfied=false") != std::string::npos);
}

TEST_CASE("run phase as JSON") {
  const auto r = call({"run", "--gen", "region:N=4", "--alg", "phase", "--format", "json"});
  REQUIRE(r.code == incmax::cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 10);
  REQUIRE(j["runs"].size() == 1);
  CHECK(j["runs"][0]["algorithm"] == "phase");
  CHECK(j["runs"][0]["rows"].size() == 10);
  CHECK(j["runs"][0]["bound_satisfied"] == true);
}

TEST_CASE("run reports exact ratios and infinity in JSON") {
  const auto r = call({"run", "--gen", "gk:k=2", "--alg", "greedy", "--kmax", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["runs"][0]["worst_ratio"] == "32/15");
}

TEST_CASE("budget limits") {
  const auto r = call({"run", "--gen", "region:N=6", "--budget", "100"});
  CHECK(r.code == incmax::cli::kResourceError);
  CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("verify reproduces the witness tables") {
  SUBCASE("fig1") {
    const auto r = call({"verify", "--gen", "fig1"});
    CHECK(r.code == incmax::cli::kOk);
    CHECK(r.out.find("subadditive,fails,\"{(s,v)}\",\"{(v,t)}\"") != std::string::npos);
    CHECK(r.out.find("accountable,fails,\"{(s,v);(v,t)}\"") != std::string::npos);
    CHECK(r.out.find("monotone,holds") != std::string::npos);
  }
  SUBCASE("p3") {
    const auto r = call({"verify", "--gen", "p3", "--alpha", "1", "--alpha", "2"});
    CHECK(r.out.find("submodular,fails,\"{e1;e2}\",\"{e2;e3}\"") != std::string::npos);
    CHECK(r.out.find("alpha_augmentable(1),fails,\"{e2}\",\"{e1;e3}\"") != std::string::npos);
    CHECK(r.out.find("alpha_augmentable(2),holds") != std::string::npos);
  }
}

TEST_CASE("verify with an expectation file") {
  const auto dir = tmp_dir();
  const auto good = dir / "expect_good.json";
  const auto bad = dir / "expect_bad.json";
  std::ofstream(good) << R"x({"submodular":"fails","alpha_augmentable(2)":"holds"})x";
  std::ofstream(bad) << R"({"submodular":"holds"})";
  CHECK(call({"verify", "--gen", "fig3", "--expect", good.string()}).code == incmax::cli::kOk);
  const auto r = call({"verify", "--gen", "fig3", "--expect", bad.string()});
  CHECK(r.code == incmax::cli::kBoundViolated);
  CHECK(r.err.find("mismatch: submodular") != std::string::npos);
}

TEST_CASE("verify modes") {
  const auto r = call({"verify", "--gen", "region:N=5", "--mode", "auto", "--trials", "2000", "--format", "json"});
  REQUIRE(r.code == incmax::cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["property"] == "monotone");
  CHECK(j[0]["exhaustive"] == false);
  CHECK(call({"verify", "--gen", "region:N=5"}).code == incmax::cli::kResourceError);
}

TEST_CASE("lowerbound modes") {
  SUBCASE("certified pair") {
    const auto r = call({"lowerbound", "--mode", "problematic-pair", "--rho", "2.18", "--beta", "0.86"});
    CHECK(r.code == incmax::cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "certified");
    CHECK(j["sup_bound"].get<double>() < 0);
  }
  SUBCASE("uncertified pair") {
    const auto r = call({"lowerbound", "--mode", "problematic-pair", "--rho", "1.0", "--beta", "0.5"});
    CHECK(r.code == incmax::cli::kBoundViolated);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "not-certified");
  }
  SUBCASE("region search") {
    const auto r = call({"lowerbound", "--mode", "region-search", "--regions", "5"});
    CHECK(r.code == incmax::cli::kOk);
    CHECK(r.out == "N,worst_ratio,sequence\n5,1.21419488,\"[4,5]\"\n");
  }
  SUBCASE("gk table") {
    const auto r = call({"lowerbound", "--mode", "gk-table", "--kmin", "2", "--kmax", "3"});
    CHECK(r.code == incmax::cli::kOk);
    CHECK(r.out.find("2,30,64,32/15,2.13333333,true,true\n") != std::string::npos);
    CHECK(r.out.find("1458/665") != std::string::npos);
  }
  SUBCASE("bad mode") {
    CHECK(call({"lowerbound", "--mode", "nope"}).code == incmax::cli::kInputError);
  }
}

TEST_CASE("generate then run from the file") {
  const auto path = tmp_dir() / "gk3.json";
  CHECK(call({"generate", "--gen", "gk:k=3", "--out", path.string()}).code == incmax::cli::kOk);
  CHECK(slurp(path).find("\"bridge_flow\"") != std::string::npos);
  const auto r = call({"run", "--instance", path.string(), "--alg", "greedy", "--kmax", "6"});
  CHECK(r.code == incmax::cli::kOk);
  CHECK(r.out.find("# worst_ratio=2.19248") != std::string::npos);
}

TEST_CASE("input errors") {
  CHECK(call({"run"}).code == incmax::cli::kInputError);
  CHECK(call({"run", "--gen", "region:N=3", "--instance", "x.json"}).code == incmax::cli::kInputError);
  CHECK(call({"run", "--gen", "nope"}).code == incmax::cli::kInputError);
  CHECK(call({"run", "--gen", "region:N=3", "--kmax", "99"}).code == incmax::cli::kInputError);
  CHECK(call({"run", "--instance", "/nonexistent/file.json"}).code == incmax::cli::kInputError);
  CHECK(call({"run", "--gen", "region:N=3", "--alg", "magic"}).code == incmax::cli::kInputError);
  CHECK(call({"frobnicate"}).code == incmax::cli::kInputError);
  CHECK(call({"run", "--gen", "region:N=3", "--budget", "abc"}).code == incmax::cli::kInputError);
}

TEST_CASE("help") {
  const auto r = call({"--help"});
  CHECK(r.code == incmax::cli::kOk);
  CHECK(r.out.find("lowerbound") != std::string::npos);
}
