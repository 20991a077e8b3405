#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "horn/feasibility.hpp"

using horn::DaggerRow;
using horn::Rational;
using horn::RowKind;
using horn::SpectrumInstance;
using horn::Verdict;

namespace {

SpectrumInstance make_instance(int n, int m, int r,
                               std::vector<std::vector<long>> entries) {
  SpectrumInstance inst;
  inst.n = n;
  inst.m = m;
  inst.r = r;
  for (auto& tuple : entries) {
    std::vector<Rational> row;
    for (long v : tuple) row.emplace_back(v);
    inst.alpha.push_back(std::move(row));
  }
  return inst;
}

SpectrumInstance random_instance(int n, int m, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numer(-16, 16);
  SpectrumInstance inst;
  inst.n = n;
  inst.m = m;
  inst.r = r;
  inst.alpha.resize(static_cast<size_t>(m));
  for (auto& tuple : inst.alpha) {
    std::vector<int> values(static_cast<size_t>(n));
    for (auto& v : values) v = numer(rng);
    std::sort(values.rbegin(), values.rend());
    for (int v : values) tuple.emplace_back(Rational(v, 8));
  }
  return inst;
}

}  // namespace

TEST_CASE("check_dagger", "[feasibility]") {
  CHECK(horn::check_dagger(make_instance(2, 1, 2, {{2, -1}})).empty());
  auto violations = horn::check_dagger(make_instance(2, 1, 2, {{0, 1}}));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == DaggerRow{1, 1});
  CHECK(horn::check_dagger(make_instance(3, 1, 3, {{1, 1, 1}})).empty());
}

TEST_CASE("evaluate slack", "[feasibility]") {
  horn::HornInequality major{horn::IneqKind::Major, 1,
                             {horn::SchubertIndex(2, {2}), horn::SchubertIndex(2, {1}),
                              horn::SchubertIndex(2, {1})},
                             2, 3, 2};
  auto inst = make_instance(2, 3, 2, {{2, -1}, {1, 0}, {1, 0}});
  CHECK(horn::evaluate(major, inst) == 1);

  horn::HornInequality rank{horn::IneqKind::RankBound, 1,
                            {horn::SchubertIndex(1, {1}), horn::SchubertIndex(1, {1})},
                            2, 2, 1};
  auto inst2 = make_instance(2, 2, 1, {{2, -1}, {1, 0}});
  CHECK(horn::evaluate(rank, inst2) == 1);

  auto zero = make_instance(2, 2, 1, {{0, 0}, {0, 0}});
  CHECK(horn::evaluate(rank, zero) == 0);

  CHECK_THROWS_AS(horn::evaluate(major, inst2), std::invalid_argument);
}

TEST_CASE("check: feasible 2x2 with a tight weyl row", "[feasibility]") {
  auto inst = make_instance(2, 2, 1, {{2, -1}, {1, 0}});
  Verdict verdict = horn::check(inst);
  CHECK(verdict.feasible);
  REQUIRE(verdict.tight.size() == 1);
  CHECK(verdict.tight[0].kind == RowKind::Major);
  // the tight row is alpha_2(1) + alpha_1(2) >= 0
  const auto& sys = horn::cached_system(2, 2, 1);
  const auto& row = sys.majors.at(static_cast<size_t>(verdict.tight[0].index));
  CHECK(row.subsets[0] == horn::SchubertIndex(2, {2}));
  CHECK(row.subsets[1] == horn::SchubertIndex(2, {1}));
}

TEST_CASE("check: r=0 forces zero trace", "[feasibility]") {
  auto inst = make_instance(2, 2, 0, {{2, -1}, {1, 0}});
  Verdict verdict = horn::check(inst);
  CHECK_FALSE(verdict.feasible);
}

TEST_CASE("check: infeasible when all cross sums are negative", "[feasibility]") {
  auto inst = make_instance(2, 2, 1, {{1, 1}, {-2, -2}});
  Verdict verdict = horn::check(inst);
  CHECK_FALSE(verdict.feasible);
  CHECK(!verdict.violated.empty());
}

TEST_CASE("dagger violations yield an infeasible verdict, not an error", "[feasibility]") {
  auto inst = make_instance(2, 2, 1, {{-1, 2}, {1, 0}});
  Verdict verdict = horn::check(inst);
  CHECK_FALSE(verdict.feasible);
  REQUIRE(verdict.dagger_violations.size() == 1);
  CHECK(verdict.dagger_violations[0] == DaggerRow{1, 1});
}

TEST_CASE("check_extended", "[feasibility]") {
  auto zero = make_instance(2, 2, 1, {{0, 0}, {0, 0}});
  CHECK(horn::check_extended(zero).feasible);

  // slacks of shared rows agree between the R and S systems
  auto inst = make_instance(2, 3, 2, {{1, 0}, {1, 0}, {1, -3}});
  const auto& rsys = horn::cached_system(2, 3, 2);
  const auto& ssys = horn::cached_system(2, 3, 2, true);
  Verdict rv = horn::check_with_system(inst, rsys);
  Verdict sv = horn::check_with_system(inst, ssys);
  for (size_t i = 0; i < rsys.majors.size(); ++i) {
    auto it = std::find_if(ssys.majors.begin(), ssys.majors.end(), [&](const auto& row) {
      return row.subsets == rsys.majors[i].subsets;
    });
    REQUIRE(it != ssys.majors.end());
    size_t j = static_cast<size_t>(it - ssys.majors.begin());
    CHECK(rv.margins[rsys.dagger_rows.size() + i] == sv.margins[ssys.dagger_rows.size() + j]);
  }
}

TEST_CASE("rank_reduction_split examples", "[feasibility]") {
  auto feasible = make_instance(2, 2, 1, {{2, -1}, {1, 0}});
  auto [first, second] = horn::rank_reduction_split(feasible);
  CHECK(first.feasible);
  CHECK(second.feasible);

  auto infeasible = make_instance(2, 2, 1, {{1, 1}, {-2, -2}});
  auto [f2, s2] = horn::rank_reduction_split(infeasible);
  CHECK_FALSE(f2.feasible);

  auto zero = make_instance(3, 2, 1, {{0, 0, 0}, {0, 0, 0}});
  auto [f3, s3] = horn::rank_reduction_split(zero);
  CHECK(f3.feasible);
  CHECK(s3.feasible);

  auto full = make_instance(2, 2, 2, {{1, 0}, {1, 0}});
  CHECK_THROWS_AS(horn::rank_reduction_split(full), std::invalid_argument);
}

TEST_CASE("verdicts are invariant under positive scaling", "[feasibility][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int r = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    auto inst = random_instance(n, 3, r, rng);
    auto scaled = inst;
    for (auto& tuple : scaled.alpha)
      for (auto& v : tuple) v *= Rational(7, 3);
    Verdict a = horn::check(inst);
    Verdict b = horn::check(scaled);
    CHECK(a.feasible == b.feasible);
    CHECK(a.tight == b.tight);
  }
}

TEST_CASE("verdicts are invariant under permuting the factors", "[feasibility][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int r = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    auto inst = random_instance(n, 3, r, rng);
    auto permuted = inst;
    std::rotate(permuted.alpha.begin(), permuted.alpha.begin() + 1, permuted.alpha.end());
    CHECK(horn::check(inst).feasible == horn::check(permuted).feasible);
  }
}

TEST_CASE("feasibility is monotone in the rank bound", "[feasibility][property]") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int r = static_cast<int>(rng() % static_cast<unsigned>(n));
    auto inst = random_instance(n, 3, r, rng);
    if (!horn::check(inst).feasible) continue;
    auto relaxed = inst;
    relaxed.r = r + 1;
    CHECK(horn::check(relaxed).feasible);
  }
}

TEST_CASE("R-feasible implies S-feasible", "[feasibility][property]") {
  std::mt19937_64 rng(17);
  int feasible_seen = 0;
  for (int trial = 0; trial < 200 && feasible_seen < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int r = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    auto inst = random_instance(n, 3, r, rng);
    if (!horn::check(inst).feasible) continue;
    ++feasible_seen;
    CHECK(horn::check_extended(inst).feasible);
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("the psd-sum plus negated-tail split equivales the rank-bounded verdict", "[feasibility][property]") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int r = static_cast<int>(rng() % static_cast<unsigned>(n));
    auto inst = random_instance(n, 3, r, rng);
    auto [first, second] = horn::rank_reduction_split(inst);
    CHECK((first.feasible && second.feasible) == horn::check(inst).feasible);
  }
}

TEST_CASE("normalization scales the largest entry to one", "[feasibility]") {
  auto inst = make_instance(2, 2, 1, {{4, -2}, {1, 0}});
  auto unit = horn::normalized(inst);
  CHECK(unit.alpha[0][0] == 1);
  CHECK(unit.alpha[0][1] == Rational(-1, 2));
  auto zero = make_instance(2, 2, 1, {{0, 0}, {0, 0}});
  CHECK(horn::normalized(zero).alpha == zero.alpha);
}
