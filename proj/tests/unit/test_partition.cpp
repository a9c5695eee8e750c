#include "doctest.h"
#include "psk/errors.hpp"
#include "psk/partition.hpp"

using namespace psk;

TEST_CASE("partition invariants") {
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  const Partition p({3, 2, 2, 1});
  CHECK(p.weight() == 8);
  CHECK(p.length() == 4);
  CHECK(p[5] == 0);
  CHECK(p.conjugate() == Partition({4, 3, 1}));
  CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition({3, 2, 1}));
}

TEST_CASE("partition text format") {
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition::parse(" 4 , 4") == Partition({4, 4}));
  CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("3,1,"), ParseError);
  CHECK_THROWS_AS(Partition::parse(""), ParseError);
}

TEST_CASE("cycle counts round trip") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto c = to_cycle_counts(mu);
      CHECK(c.weight() == n);
      CHECK(to_partition(c) == mu);
    }
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(3) == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(4, 2) == std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2})});
  const auto p10 = partitions_of(10);
  CHECK(p10.size() == 42);
  CHECK(std::is_sorted(p10.rbegin(), p10.rend()));
  CHECK(partitions_of(14).size() == 135);
}

TEST_CASE("centralizer_size") {
  CHECK(centralizer_size(Partition({1, 1, 1})) == 6);
  for (int n = 1; n <= 12; ++n) CHECK(centralizer_size(Partition({n})) == static_cast<std::uint64_t>(n));
  CHECK(centralizer_size(Partition({2, 1})) == 2);
  CHECK(class_size(Partition({2, 1})) == 3);
}

TEST_CASE("class sizes partition the group") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t total = 0;
    for (const auto& mu : partitions_of(n)) total += factorial(n) / centralizer_size(mu);
    CHECK(total == factorial(n));
  }
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), CapExceeded);
}
