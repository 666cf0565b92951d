#include <doctest.h>

#include "fixtures.hpp"
#include "qalg/report.hpp"

using namespace qalg;
using namespace qalg::testing;

TEST_CASE("rationals") {
  CHECK(to_json(Rational(3)) == "3");
  CHECK(to_json(Rational(-2, 6)) == "-1/3");
  CHECK(to_json(Vector{Rational(1, 2), Rational(0)}) == Json::array({"1/2", "0"}));
}

TEST_CASE("module report") {
  const auto kr = load_algebra("kronecker.qalg");
  const Representation m = make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}});
  const Json j = to_json(m);
  CHECK(j["dim_vector"] == Json::array({2, 2}));
  CHECK(j["total_dim"] == 4);
  CHECK(j["maps"]["b"] == Json::array({Json::array({"0", "0"}), Json::array({"1", "0"})}));
  CHECK(serialize_report(to_json(m, false)).rfind("{\n  \"dim_vector\": [\n    2,\n    2\n  ]", 0) == 0);
}

TEST_CASE("certificate and witness") {
  const auto kr = load_algebra("kronecker.qalg");
  const auto w = *is_distributive(*kr).witness;
  CHECK(to_json(*kr, w) == Json{{"e", "1"}, {"f", "2"}, {"l", 0}, {"v", "a"}, {"w", "b"}});
  CHECK(to_json(IndecomposabilityCertificate{true, 2, 1}) ==
        Json{{"verdict", true}, {"end_dim", 2}, {"radical_dim", 1}});
}

TEST_CASE("crown report") {
  const RayCategory p = load_category("fig2_1.qalg");
  const auto c = minimal_crown(p);
  REQUIRE(c.has_value());
  const Json j = to_json(p, *c);
  CHECK(j["crown_length"] == 4);
  CHECK(j["n"] == 2);
  CHECK(j["morphisms"].size() == 4);
  CHECK(j["t"] == 8);
}

TEST_CASE("category summary") {
  const RayCategory p = load_category("a3.qalg");
  const Json j = summary_json(p);
  CHECK(j["objects"] == Json::array({"1", "2", "3"}));
  CHECK(j["long"] == Json::array({"β*α"}));
  CHECK(j["morphisms"].size() == 6);
}

TEST_CASE("serialization is stable") {
  const Json j{{"b", 1}, {"a", Json::array({"1/2"})}};
  CHECK(serialize_report(j) == "{\n  \"a\": [\n    \"1/2\"\n  ],\n  \"b\": 1\n}\n");
  CHECK(serialize_report(Json::parse(serialize_report(j))) == serialize_report(j));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
