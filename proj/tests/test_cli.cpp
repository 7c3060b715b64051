#include "doctest_complex.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "invlab/verify.hpp"

using invlab::cli::run_command;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> argv) {
  std::ostringstream out, err;
  const int code = run_command(argv, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  return cells;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("invlab_test_" + name);
}
}  // namespace

TEST_CASE("gap subcommand") {
  const auto r = run({"gap", "--z", "0+0.5i", "--w", "0+0.25i"});
  REQUIRE(r.code == 0);
  std::stringstream ss(r.out);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  CHECK(header == "z,w,k_loc,k_glob,t1,t2,gap,residual");
  const auto cells = split_row(row);
  REQUIRE(cells.size() == 8);
  CHECK(std::stod(cells[6]) == doctest::Approx(0.1115718).epsilon(1e-6));
  CHECK(std::stod(cells[7]) <= 1e-13);
}

TEST_CASE("distance subcommand") {
  const auto r = run({"distance", "--domain", "disc", "--z", "0", "--w", "0.5", "--which", "k"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.5493061") != std::string::npos);
  const auto j = run({"distance", "--domain", "halfplane", "--z", "i", "--w", "2i", "--which",
                      "c", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.dump().find("0.34657") != std::string::npos);
}

TEST_CASE("diagnostics name the flag") {
  auto r = run({"distance", "--z", "0+", "--w", "0.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--z") != std::string::npos);
  r = run({"distance", "--domain", "annulus", "--z", "0", "--w", "0.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--domain") != std::string::npos);
  r = run({"distance", "--z", "0", "--w", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--w") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("geodesic subcommand") {
  const auto r = run({"geodesic", "--domain", "disc", "--z", "-0.5", "--w", "0.5", "--nodes", "17",
                      "--levels", "2"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["nodes"].size() == 17);
  CHECK(doc["length"].get<double>() == doctest::Approx(2 * std::atanh(0.5)).epsilon(1e-3));
  CHECK(doc["epsilon"].is_number());
  CHECK(run({"geodesic", "--nodes", "16", "--z", "0", "--w", "0.5"}).code == 1);
}

TEST_CASE("bergman subcommand") {
  const auto r = run({"bergman", "--domain", "disc", "--z", "0", "--X", "1", "--truncation", "50"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["kernel"].get<double>() == doctest::Approx(0.3183099));
  CHECK(doc["beta"].get<double>() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  CHECK(doc["beta_tilde"].get<double>() == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("sweep output is reproducible") {
  const std::vector<std::string> argv{"sweep", "--family", "random-cap", "--region", "0.05",
                                      "--samples", "40", "--seed", "5"};
  const auto a = run(argv), b = run(argv);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("t,z,w,gap,rhs,ratio\n", 0) == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 41);
  auto c = argv;
  c.back() = "6";
  CHECK(run(c).out != a.out);
  for (const char* fam : {"imaginary-axis", "normal"}) {
    const auto r = run({"sweep", "--family", fam});
    CHECK(r.code == 0);
  }
  CHECK(run({"sweep", "--family", "spiral"}).code == 1);
}

TEST_CASE("config file with flag overrides") {
  const auto cfg = temp_path("config.json");
  const auto out = temp_path("sweep.csv");
  std::ofstream(cfg) << R"({"seed": 5, "format": "csv"})";
  auto r = run({"sweep", "--family", "random-cap", "--samples", "10", "--config", cfg.string(),
                "--out", out.string()});
  REQUIRE(r.code == 0);
  const auto from_cfg = slurp(out);
  const auto direct =
      run({"sweep", "--family", "random-cap", "--samples", "10", "--seed", "5"}).out;
  CHECK(from_cfg == direct);
  std::ofstream(cfg) << R"({"sede": 5})";
  r = run({"sweep", "--config", cfg.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("sede") != std::string::npos);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

TEST_CASE("verify single suite and failing tolerance") {
  const auto report = temp_path("report.json");
  auto r = run({"verify", "--suite", "gap-identity", "--out", report.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("gap-identity: PASS") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(report));
  CHECK(doc["gap-identity"]["pass"] == true);
  CHECK(doc["gap-identity"]["measured"].is_object());
  CHECK(doc["gap-identity"]["tolerance"].is_number());

  // a tolerance nobody can meet must turn into exit code 2
  const auto cfg = temp_path("tight.json");
  std::ofstream(cfg) << R"({"tolerances": {"gap_identity_abs": 1e-30}})";
  r = run({"verify", "--suite", "gap-identity", "--config", cfg.string(), "--out", report.string()});
  CHECK(r.code == 2);
  CHECK(r.out.find("gap-identity: FAIL") != std::string::npos);
  std::ofstream(cfg) << R"({"tolerances": {"no_such_tolerance": 1}})";
  CHECK(run({"verify", "--suite", "gap-identity", "--config", cfg.string()}).code == 1);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 1);
  std::filesystem::remove(cfg);
  std::filesystem::remove(report);
}

TEST_CASE("suite registry") {
  const auto& names = invlab::suite_names();
  CHECK(names.size() == 11);
  CHECK_THROWS(invlab::Tolerances({{"bogus", 1.0}}));
  CHECK(invlab::Tolerances()["geodesic_rel"] == 1e-4);
}
