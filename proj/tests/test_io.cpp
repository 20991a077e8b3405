#include <catch2/catch_amalgamated.hpp>

#include "horn/io.hpp"

using horn::Rational;
using horn::SpectrumInstance;

TEST_CASE("rational parsing and formatting", "[io]") {
  CHECK(horn::parse_rational("3/4") == Rational(3, 4));
  CHECK(horn::parse_rational("-7") == Rational(-7));
  CHECK(horn::parse_rational("0.25") == Rational(1, 4));
  CHECK(horn::parse_rational("-1.5") == Rational(-3, 2));
  CHECK(horn::parse_rational("2/4") == Rational(1, 2));
  CHECK(horn::parse_rational("+3/6") == Rational(1, 2));
  CHECK(horn::format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(horn::format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(horn::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(horn::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(horn::parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(horn::parse_rational(""), std::invalid_argument);
}

TEST_CASE("instance json round trip", "[io]") {
  SpectrumInstance inst;
  inst.n = 2;
  inst.m = 2;
  inst.r = 1;
  inst.alpha = {{Rational(2), Rational(-1, 3)}, {Rational(1), Rational(0)}};
  auto j = horn::instance_to_json(inst);
  auto back = horn::instance_from_json(j);
  CHECK(back.n == inst.n);
  CHECK(back.m == inst.m);
  CHECK(back.r == inst.r);
  CHECK(back.alpha == inst.alpha);
  CHECK(j["alpha"][0][1].get<std::string>() == "-1/3");  // strings, never floats
}

TEST_CASE("instance json validation", "[io]") {
  auto j = nlohmann::json::parse(R"({"n":2,"m":1,"r":1,"alpha":[["1","0","3"]]})");
  CHECK_THROWS(horn::instance_from_json(j));
  auto bad = nlohmann::json::parse(R"({"n":2,"m":1,"r":1,"alpha":[["1","1/0"]]})");
  CHECK_THROWS_AS(horn::instance_from_json(bad), std::invalid_argument);
}

TEST_CASE("row description format", "[io]") {
  horn::HornInequality row{horn::IneqKind::Major, 2,
                           {horn::SchubertIndex(4, {1, 3}), horn::SchubertIndex(4, {1, 3}),
                            horn::SchubertIndex(4, {1, 4})},
                           4, 3, 1};
  CHECK(horn::describe_row(row) == "major t=2 I1={1,3} I2={1,3} I3={1,4}");
  horn::HornInequality rank{horn::IneqKind::RankBound, 1,
                            {horn::SchubertIndex(1, {1}), horn::SchubertIndex(1, {1}),
                             horn::SchubertIndex(1, {1})},
                            2, 3, 1};
  CHECK(horn::describe_row(rank) == "rank t=1 P1={1} P2={1} P3={1}");
  CHECK(horn::describe_row(horn::DaggerRow{1, 2}) == "dagger s=1 i=2");
}

TEST_CASE("system text round trip", "[io]") {
  for (auto [n, m, r] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 3, 2}, {3, 2, 0}}) {
    auto system = horn::build_system(n, m, r);
    for (bool include_dagger : {false, true}) {
      auto text = horn::system_to_text(system, include_dagger);
      auto back = horn::system_from_text(text);
      CHECK(back.n == system.n);
      CHECK(back.m == system.m);
      CHECK(back.r == system.r);
      CHECK(back.majors == system.majors);
      CHECK(back.rank_bounds == system.rank_bounds);
      CHECK(back.dagger_rows == system.dagger_rows);
    }
  }
}

TEST_CASE("system json round trip", "[io]") {
  auto system = horn::build_system(3, 3, 1);
  auto back = horn::system_from_json(horn::system_to_json(system, true));
  CHECK(back.majors == system.majors);
  CHECK(back.rank_bounds == system.rank_bounds);
  CHECK(back.dagger_rows == system.dagger_rows);
}

TEST_CASE("malformed system text is rejected", "[io]") {
  CHECK_THROWS(horn::system_from_text("major t=1 I1={1}\n"));  // missing header
  CHECK_THROWS(horn::system_from_text(
      "# spectral-horn system n=2 m=3 r=1 generator=x\nmajor t=1 I1={1}\n"));
}

TEST_CASE("verdict json carries names, slacks and violations", "[io]") {
  SpectrumInstance inst;
  inst.n = 2;
  inst.m = 2;
  inst.r = 0;
  inst.alpha = {{Rational(2), Rational(-1)}, {Rational(1), Rational(0)}};
  const auto& system = horn::cached_system(2, 2, 0);
  auto verdict = horn::check_with_system(inst, system);
  auto j = horn::verdict_to_json(system, verdict);
  CHECK_FALSE(j["feasible"].get<bool>());
  CHECK(j["violated"].size() == verdict.violated.size());
  CHECK(j["margins"].size() == static_cast<size_t>(system.total_rows()));
}

TEST_CASE("realization json shape", "[io]") {
  horn::RealizationResult result;
  result.found = true;
  result.residual = 1e-9;
  result.matrices = {horn::CMatrix::Identity(2, 2)};
  result.sum_eigenvalues = {1.0, 1.0};
  auto j = horn::realization_to_json(result);
  CHECK(j["found"].get<bool>());
  CHECK(j["matrices"][0]["re"][0][0].get<double>() == 1.0);
  CHECK(j["matrices"][0]["im"][0][0].get<double>() == 0.0);
}
