#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "csl/json_io.hpp"
#include "helpers.hpp"

using namespace csl;
using test::qv;

TEST_CASE("polytope JSON round trip canonicalizes on load") {
  const Polytope square = test::unit_square();
  const json j = to_json(square);
  CHECK(j.at("dim") == 2);
  CHECK(j.at("vertices").size() == 4);
  CHECK(polytope_from_json(j) == square);

  // redundant points disappear when parsed
  const json redundant =
      json::parse(R"({"dim": 2, "vertices": [["0","0"], ["1","0"], ["1/2","0"]]})");
  CHECK(polytope_from_json(redundant) ==
        Polytope::from_points({qv({0, 0}), qv({1, 0})}));
}

TEST_CASE("qvector JSON uses reduced rational strings") {
  const QVector v = qv({Rational(2, 4), Rational(-3)});
  const json j = to_json(v);
  CHECK(j == json::array({"1/2", "-3"}));
  CHECK(qvector_from_json(j) == v);
  CHECK_THROWS_AS(qvector_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(qvector_from_json(json::array({"1/0"})), std::invalid_argument);
  CHECK_THROWS_AS(qvector_from_json(j, 3), std::invalid_argument);
}

TEST_CASE("load_instance keeps carriers that already contain the origin") {
  const json j = json::parse(
      R"({"dimension": 2, "vertices": [["0","0"], ["1","0"], ["0","1"], ["1","1"]]})");
  const LoadedInstance loaded = load_instance(j);
  CHECK(loaded.translation == qv({0, 0}));
  CHECK(loaded.instance.carrier() == test::unit_square());
}

TEST_CASE("load_instance translates carriers missing the origin") {
  const json j = json::parse(
      R"({"dimension": 2, "vertices": [["1","1"], ["2","1"], ["1","2"], ["2","2"]],
          "join_kind": "componentwise_max"})");
  const LoadedInstance loaded = load_instance(j);
  CHECK(loaded.translation == qv({1, 1}));
  CHECK(loaded.instance.carrier() == test::unit_square());
  CHECK(loaded.instance.contains(qv({0, 0})));
}

TEST_CASE("load_instance rejects invalid carriers") {
  // triangle: not closed under componentwise max
  const json tri = json::parse(
      R"({"dimension": 2, "vertices": [["0","0"], ["1","0"], ["0","1"]]})");
  CHECK_THROWS_AS(load_instance(tri), std::invalid_argument);

  const json empty = json::parse(R"({"dimension": 2, "vertices": []})");
  CHECK_THROWS_AS(load_instance(empty), std::invalid_argument);

  const json zero_dim = json::parse(R"({"dimension": 0, "vertices": [["0"]]})");
  CHECK_THROWS_AS(load_instance(zero_dim), std::invalid_argument);

  // with translation disabled, the origin must already be a member
  const json shifted = json::parse(
      R"({"dimension": 2, "vertices": [["1","1"], ["2","1"], ["1","2"], ["2","2"]],
          "translate_to_zero": false})");
  CHECK_THROWS_AS(load_instance(shifted), std::invalid_argument);

  const json bad_kind = json::parse(
      R"({"dimension": 2, "vertices": [["0","0"]], "join_kind": "lexicographic"})");
  CHECK_THROWS_AS(load_instance(bad_kind), std::invalid_argument);
}

TEST_CASE("load_instance_file reports missing and malformed files") {
  CHECK_THROWS_AS(load_instance_file("/nonexistent/instance.json"), std::runtime_error);
  const std::string path = "bad_instance_test.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_instance_file(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("law report JSON shape") {
  LawReport rep{"demo-law", 9, 3, {}};
  detail::record(rep, {{"x", "1/2"}, {"lhs", "1"}, {"rhs", "2"}});
  const json j = to_json(rep);
  CHECK(j.at("law") == "demo-law");
  CHECK(j.at("seed") == 9);
  CHECK(j.at("cases") == 3);
  CHECK(j.at("pass") == false);
  REQUIRE(j.at("violations").size() == 1);
  CHECK(j.at("violations")[0].at("x") == "1/2");

  const LawReport clean{"demo-law", 9, 3, {}};
  CHECK(to_json(clean).at("pass") == true);
}

TEST_CASE("witness and membership JSON") {
  const Witness w{qv({Rational(1, 2), 0}), Rational(1, 3)};
  const json j = to_json(w);
  CHECK(j.at("center") == json::array({"1/2", "0"}));
  CHECK(j.at("ratio") == "1/3");

  const WMembershipResult miss{};
  CHECK(to_json(miss) == json{{"member", false}});
}
