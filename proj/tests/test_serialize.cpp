#include <cstdlib>

#include "doctest.h"
#include "theta2/registry.hpp"
#include "theta2/serialize.hpp"

using namespace theta2;

TEST_CASE("serialization round trip is bit identical") {
  auto f = eval(named_form("Phi1"), 3);
  std::string s1 = serialize_expansion("Phi1", f);
  std::string name;
  FormExpansion g = parse_expansion(s1, &name);
  CHECK(name == "Phi1");
  std::string s2 = serialize_expansion("Phi1", g);
  CHECK(s1 == s2);
  CHECK(g.j == 2);
  CHECK(g.k2 == 10);
  for (int t = 0; t < 3; ++t) CHECK(g.comps[size_t(t)].equals(f.comps[size_t(t)]));
}

TEST_CASE("repeated evaluation serializes identically") {
  auto a = serialize_expansion("G12", eval(named_form("G12"), 3));
  auto b = serialize_expansion("G12", eval(named_form("G12"), 3));
  CHECK(a == b);
}

TEST_CASE("cache stores and reloads") {
  std::string dir = "/tmp/theta2-test-cache";
  int rc = std::system(("rm -rf " + dir).c_str());
  REQUIRE(rc == 0);
  ExpansionCache cache(dir);
  REQUIRE(cache.enabled());
  CHECK(!cache.load("x1", 3).has_value());
  auto f = cache.eval_cached("x1", 3);
  auto hit = cache.load("x1", 3);
  REQUIRE(hit.has_value());
  CHECK(hit->comps[0].equals(f.comps[0]));
  // a second cache object sees the same bytes
  ExpansionCache cache2(dir);
  auto f2 = cache2.eval_cached("x1", 3);
  CHECK(serialize_expansion("x1", f) == serialize_expansion("x1", f2));
}

TEST_CASE("json output is well formed enough to contain the records") {
  auto f = eval(named_form("x1"), 2);
  std::string js = expansion_json("x1", f);
  CHECK(js.find("\"name\":\"x1\"") != std::string::npos);
  CHECK(js.find("\"A\":0") != std::string::npos);
}

#include "json.hpp"
#include "theta2/certify.hpp"
#include "theta2/verify.hpp"

TEST_CASE("emitted json carries the schema's required fields") {
  auto rep = run_suite("props", 3, 1);
  auto js = nlohmann::json::parse(suite_report_json(rep));
  for (const char* k : {"suite", "order", "items", "failures", "wall_seconds"})
    CHECK(js.contains(k));
  for (const auto& item : js["items"])
    for (const char* k : {"id", "anchor", "order", "status"}) CHECK(item.contains(k));

  auto ej = nlohmann::json::parse(expansion_json("x1", eval(named_form("x1"), 2)));
  for (const char* k : {"name", "order", "j", "k2", "pi_power", "group", "components"})
    CHECK(ej.contains(k));
}

TEST_CASE("hilbert ledger arithmetic") {
  // 9t^5 - (5t^7 + 5t^9) + t^11 over (1-t^2)^5 is the sigma2 series
  CHECK(hilbert_check({{{5, 9}}, {{7, 5}, {9, 5}}, {{11, 1}}}, 2,
                      registered_genfun("sigma2"), 30));
  CHECK(!hilbert_check({{{5, 10}}, {{7, 5}, {9, 5}}, {{11, 1}}}, 2,
                       registered_genfun("sigma2"), 30));
}
