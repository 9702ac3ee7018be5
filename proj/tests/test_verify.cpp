#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polargap/errors.hpp"
#include "polargap/io.hpp"
#include "polargap/verify.hpp"

using namespace polargap;

TEST_CASE("onegap report") {
  verify::RunConfig cfg;
  cfg.family = "onegap";
  const auto r = verify::run_verify(cfg);
  CHECK(r.pass());
  std::set<std::string> names;
  for (const auto& c : r.checks) CHECK(names.insert(c.name).second);
  REQUIRE(r.find("onegap.r3.period"));
  CHECK(r.find("onegap.r3.period")->measured == doctest::Approx(2.8651483417707840).epsilon(1e-12));

  const std::string a = verify::to_json(r);
  CHECK(a == verify::to_json(verify::run_verify(cfg)));
  const auto j = nlohmann::json::parse(a);
  CHECK(j.contains("checks"));
  CHECK(j["pass"].get<bool>());
  const std::string csv = verify::to_csv(r);
  CHECK(csv.rfind("name,paper_ref,measured,expected,tol,pass,gating\n", 0) == 0);
}

TEST_CASE("mutated X fails the derivative check") {
  verify::RunConfig cfg;
  cfg.family = "onegap";
  cfg.mutate_a3 = true;
  const auto r = verify::run_verify(cfg);
  CHECK_FALSE(r.pass());
  REQUIRE(r.find("onegap.r3.xr"));
  CHECK_FALSE(r.find("onegap.r3.xr")->pass);
}

TEST_CASE("configuration errors") {
  verify::RunConfig cfg;
  cfg.e2 = 1.0;
  cfg.e3 = -2.0;
  CHECK_THROWS_AS(verify::run_verify(cfg), Error);
  verify::RunConfig bad;
  bad.family = "nosuch";
  CHECK_THROWS_AS(verify::run_verify(bad), Error);
}

TEST_CASE("number formatting") {
  CHECK(io::number(0.1) == "0.10000000000000001");
  CHECK(io::json_number(std::nan("")) == "null");
  CHECK(io::number(-INFINITY) == "-inf");
}
