#include <catch2/catch_amalgamated.hpp>

#include "cyclosum/partition.hpp"

using namespace cyclosum;

namespace {
// independent count oracle: p(n, max) via the classic recursion
std::int64_t count_partitions(std::int64_t n, std::int64_t max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return count_partitions(n - max_part, max_part) +
         count_partitions(n, max_part - 1);
}
}  // namespace

TEST_CASE("partition enumeration: order and counts") {
  auto p0 = partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});

  CHECK(partitions(10).size() == 42);
  for (std::int64_t n = 0; n <= 20; ++n)
    CHECK(static_cast<std::int64_t>(partitions(n).size()) ==
          count_partitions(n, n == 0 ? 1 : n));

  CHECK_THROWS_AS(partitions(41), budget_error);
  CHECK_THROWS_AS(partitions(-1), std::invalid_argument);
}

TEST_CASE("partition validation and size") {
  CHECK(Partition{3, 1, 1}.size() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}

TEST_CASE("partition text round-trip") {
  CHECK(to_string(Partition{}) == "()");
  CHECK(to_string(Partition{2, 1}) == "(2,1)");
  CHECK(parse_partition("(2,1)") == Partition{2, 1});
  CHECK(parse_partition("()") == Partition{});
  for (auto& p : partitions(7)) CHECK(parse_partition(to_string(p)) == p);
  CHECK_THROWS_AS(parse_partition("(1,2)"), parse_error);
  CHECK_THROWS_AS(parse_partition("(2,1"), parse_error);
  CHECK_THROWS_AS(parse_partition("(2,1)x"), parse_error);
}
