#include <catch2/catch_amalgamated.hpp>

#include "cyclosum/twof4.hpp"

using namespace cyclosum;

TEST_CASE("r values are the odd powers of 2 mod 11") {
  auto rs = twof4_r_values();
  REQUIRE(rs.size() == 5);
  std::int64_t power = 2;  // 2^1
  std::set<std::int64_t> expect;
  for (int i = 0; i < 5; ++i) {
    power = power * 4 % 11;  // step 2^(2n+1) -> 2^(2n+3)
    expect.insert(power);
  }
  CHECK(std::set<std::int64_t>(rs.begin(), rs.end()) == expect);
}

TEST_CASE("single-triple spot check: (r,k,l)=(8,1,0) admits no configuration") {
  auto exps = twof4_exponents(8, 1, 0);
  std::array<std::int64_t, 11> count{};
  for (auto e : exps) {
    std::int64_t m = ((e % 11) + 11) % 11;
    ++count[static_cast<std::size_t>(m)];
    ++count[static_cast<std::size_t>((11 - m) % 11)];
  }
  REQUIRE(count[0] == 2);  // only the 2rl = 0 pair is removable
  count[0] -= 2;
  for (std::int64_t c = 1; c < 11; ++c)
    CHECK_FALSE((count[static_cast<std::size_t>(c)] == 11 &&
                 count[static_cast<std::size_t>(11 - c)] == 11));
}

TEST_CASE("the full sweep returns no counterexamples") {
  CHECK(twof4_p11_search().empty());
}
