#include <catch2/catch_amalgamated.hpp>

#include "horn/partition.hpp"
#include "horn/schubert.hpp"

using horn::Partition;
using horn::RectangleBound;
using horn::SchubertIndex;

TEST_CASE("partition canonical form and validation", "[partition]") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition{}.empty());
  CHECK(Partition({2, 2}).weight() == 4);
  CHECK(Partition({3, 1}).part(0) == 3);
  CHECK(Partition({3, 1}).part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate", "[partition]") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));

  // involution over everything fitting in 4x4
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = 0; d <= c; ++d) {
          Partition p({a, b, c, d});
          CHECK(p.conjugate().conjugate() == p);
        }
}

TEST_CASE("rectangle fit and complement", "[partition]") {
  RectangleBound bound{2, 2};
  CHECK(Partition({2, 2}).fits(bound));
  CHECK_FALSE(Partition({3}).fits(bound));
  CHECK_FALSE(Partition({1, 1, 1}).fits(bound));
  CHECK(Partition::rectangle(2, 2) == Partition({2, 2}));
  CHECK(Partition::rectangle(3, 0) == Partition{});
  CHECK(Partition({2, 1}).complement_in(bound) == Partition({1}));
  CHECK(Partition{}.complement_in(bound) == Partition({2, 2}));
}

TEST_CASE("partition parsing", "[partition]") {
  CHECK(horn::parse_partition("(3,1)") == Partition({3, 1}));
  CHECK(horn::parse_partition("()") == Partition{});
  CHECK(horn::parse_partition("") == Partition{});
  CHECK(horn::parse_partition("2,1") == Partition({2, 1}));
  CHECK_THROWS(horn::parse_partition("(1,x)"));
}

TEST_CASE("partition_of_index", "[schubert]") {
  CHECK(horn::partition_of_index(SchubertIndex(5, {2, 5})) == Partition({3, 1}));
  CHECK(horn::partition_of_index(SchubertIndex(6, {1, 2, 3})) == Partition{});
  CHECK(horn::partition_of_index(SchubertIndex(4, {3, 4})) == Partition({2, 2}));
}

TEST_CASE("index_of_partition inverts partition_of_index", "[schubert]") {
  CHECK(horn::index_of_partition(Partition({3, 1}), 2, 5) == SchubertIndex(5, {2, 5}));
  CHECK(horn::index_of_partition(Partition{}, 2, 4) == SchubertIndex(4, {1, 2}));
  CHECK(horn::index_of_partition(Partition({2, 2}), 2, 4) == SchubertIndex(4, {3, 4}));
  CHECK_THROWS_AS(horn::index_of_partition(Partition({4}), 2, 5), std::invalid_argument);

  for (int n = 1; n <= 6; ++n)
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> elements;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) elements.push_back(i);
      SchubertIndex index(n, elements);
      auto lambda = horn::partition_of_index(index);
      CHECK(lambda.fits(RectangleBound{index.cardinality(), n - index.cardinality()}));
      CHECK(horn::index_of_partition(lambda, index.cardinality(), n) == index);
    }
}

TEST_CASE("complement_index", "[schubert]") {
  CHECK(horn::complement_index(SchubertIndex(4, {2, 4})) == SchubertIndex(4, {2, 4}));
  CHECK(horn::complement_index(SchubertIndex(5, {1, 2})) == SchubertIndex(5, {1, 2, 3}));
  CHECK(horn::complement_index(SchubertIndex(5, {5})) == SchubertIndex(5, {2, 3, 4, 5}));
  CHECK_THROWS_AS(horn::complement_index(SchubertIndex(3, {1, 2, 3})), std::invalid_argument);

  // lambda(J) is the conjugate of lambda(I), exhaustively for n <= 7
  for (int n = 1; n <= 7; ++n)
    for (int mask = 1; mask < (1 << n) - 0; ++mask) {
      std::vector<int> elements;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) elements.push_back(i);
      if (static_cast<int>(elements.size()) == n) continue;
      SchubertIndex index(n, elements);
      auto complement = horn::complement_index(index);
      CHECK(complement.cardinality() == n - index.cardinality());
      CHECK(horn::partition_of_index(complement) ==
            horn::partition_of_index(index).conjugate());
    }
}

TEST_CASE("dual_index", "[schubert]") {
  CHECK(horn::dual_index(SchubertIndex(4, {1, 3})) == SchubertIndex(4, {2, 4}));
  CHECK(horn::dual_index(SchubertIndex(5, {4, 5})) == SchubertIndex(5, {1, 2}));
  CHECK(horn::dual_index(SchubertIndex(2, {2})) == SchubertIndex(2, {1}));

  for (int n = 1; n <= 6; ++n)
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> elements;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) elements.push_back(i);
      SchubertIndex index(n, elements);
      auto dual = horn::dual_index(index);
      CHECK(dual.cardinality() == index.cardinality());
      CHECK(horn::dual_index(dual) == index);
    }
}

TEST_CASE("schubert index validation", "[schubert]") {
  CHECK_THROWS_AS(SchubertIndex(4, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SchubertIndex(4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SchubertIndex(4, {3, 5}), std::invalid_argument);
  CHECK(SchubertIndex::unit(2, 5) == SchubertIndex(5, {1, 2}));
  CHECK(SchubertIndex::point(2, 5) == SchubertIndex(5, {4, 5}));
}
