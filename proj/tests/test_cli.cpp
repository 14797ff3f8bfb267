#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <unistd.h>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "commands.hpp"

namespace fs = std::filesystem;
using abm::cli::run;

namespace {

struct Captured {
  int code = 0;
  std::string out;
  std::string err;
};

Captured call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Captured c;
  c.code = run(args, out, err);
  c.out = out.str();
  c.err = err.str();
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("abm_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"poly"}).code == 2);
  CHECK(call({"poly", "--order", "0"}).code == 2);
  CHECK(call({"poly", "--order", "4", "--mode", "rk45"}).code == 2);
  CHECK(call({"tov", "--pc", "0"}).code == 2);
  CHECK(call({"tov", "--pc", "-3"}).code == 2);
  CHECK(call({"sweep", "--orders", ""}).code == 2);
  CHECK(call({"replay", "/nonexistent/manifest.json"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"poly", "--order", "4", "--max-steps", "3"}).code == 1);
  const auto ok = call({"poly", "--order", "2", "--mode", "abm-fixed"});
  CHECK(ok.code == 0);
  CHECK(first_line(ok.out) == "i,x,dx,y,epsilon_max,y_exact,error");
}

TEST_CASE("usage errors print help") {
  const auto r = call({"poly"});
  CHECK(r.err.find("--order") != std::string::npos);
}

TEST_CASE("order and real list parsing") {
  using abm::cli::parse_orders;
  using abm::cli::parse_reals;
  CHECK(parse_orders("4..9") == std::vector<int>{4, 5, 6, 7, 8, 9});
  CHECK(parse_orders("3,5,8") == std::vector<int>{3, 5, 8});
  CHECK(parse_orders("7") == std::vector<int>{7});
  CHECK_THROWS_AS(parse_orders(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_orders("9..4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orders("a,b"), std::invalid_argument);
  CHECK(parse_reals("1e-2,1e-4") == std::vector<double>{1e-2, 1e-4});
  CHECK_THROWS_AS(parse_reals("1e-2,,3"), std::invalid_argument);
}

TEST_CASE("file output writes a manifest and replay reproduces it") {
  const auto dir = scratch_dir();
  const auto star = dir / "star.csv";
  const auto r = call({"tov", "--pc", "3e35", "--order", "5", "--tol", "1e-6", "--out", star.string()});
  REQUIRE(r.code == 0);
  REQUIRE(fs::exists(star));
  const fs::path manifest = star.string() + ".manifest.json";
  REQUIRE(fs::exists(manifest));
  CHECK(first_line(slurp(star)) == "i,r_cm,dr_cm,m_g,P_erg_cm3,epsilon_max,flags");

  const auto m = nlohmann::json::parse(slurp(manifest));
  CHECK(m.at("command") == "tov");
  CHECK(m.at("resolved").at("integrator").at("order_ab") == 5);
  CHECK(m.at("resolved").contains("constants"));
  CHECK(m.contains("timestamp"));
  const auto summary = nlohmann::json::parse(r.out);
  CHECK(summary.at("status") == "ok");

  const auto again = dir / "again.csv";
  REQUIRE(call({"replay", manifest.string(), "--out", again.string()}).code == 0);
  CHECK(slurp(again) == slurp(star));
  fs::remove_all(dir);
}

TEST_CASE("poly json output and sweep table") {
  const auto poly = call({"poly", "--order", "3", "--mode", "ab-fixed", "--format", "json"});
  REQUIRE(poly.code == 0);
  const auto doc = nlohmann::json::parse(poly.out);
  CHECK(doc.at("trajectory").size() == 19);
  CHECK(doc.at("trajectory").front().at("x") == 0.5);

  const auto sweep = call({"sweep", "--orders", "4,5", "--tols", "1e-3,1e-5", "--ref-mass",
                           "1.412129e33", "--ref-radius", "916149"});
  REQUIRE(sweep.code == 0);
  std::istringstream rows(sweep.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "order,tol,steps,M_msun,R_km,rel_dM,rel_dR,status");
  int count = 0;
  while (std::getline(rows, line)) ++count;
  CHECK(count == 4);
}
