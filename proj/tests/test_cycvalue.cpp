#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <thread>

#include "cyclosum/canonical.hpp"
#include "cyclosum/cycvalue.hpp"

using namespace cyclosum;

namespace {
std::vector<long long> coeffs_of(const CycValue& v) {
  std::vector<long long> out;
  for (auto& c : v.coeffs) out.push_back(static_cast<long long>(c));
  return out;
}

std::complex<double> float_value(const RootSum& s) {
  std::complex<double> acc = 0;
  const double tau = 6.283185307179586476925286766559;
  for (auto& [e, m] : s.counts)
    acc += double(m) * std::polar(1.0, tau * double(e) / double(s.modulus));
  return acc;
}

RootSum random_sum(std::mt19937_64& rng, std::int64_t n, std::int64_t max_len) {
  std::uniform_int_distribution<std::int64_t> len_d(0, max_len);
  std::uniform_int_distribution<std::int64_t> exp_d(0, n - 1);
  RootSum s(n);
  std::int64_t len = len_d(rng);
  for (std::int64_t i = 0; i < len; ++i) s.add(exp_d(rng), 1);
  return s;
}
}  // namespace

TEST_CASE("reduction examples pinned") {
  CHECK(reduce_rootsum(RootSum(3, {0, 1, 2})).is_zero());

  RootSum s4(4);
  s4.add(1, 2);
  CHECK(coeffs_of(reduce_rootsum(s4)) == std::vector<long long>{0, 2});

  // x^8 mod (x^6 + x^3 + 1) = -x^5 - x^2
  CHECK(coeffs_of(reduce_rootsum(RootSum(9, {8}))) ==
        std::vector<long long>{0, 0, -1, 0, 0, -1});

  CHECK(is_vanishing(RootSum(2, {0, 1})));
  CHECK_FALSE(is_vanishing(RootSum(9, {1})));
}

TEST_CASE("reduction is additive over multiset union") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    std::int64_t n = 1 + (rng() % 60);
    RootSum a = random_sum(rng, n, 8), b = random_sum(rng, n, 8);
    CHECK(reduce_rootsum(a + b) == reduce_rootsum(a) + reduce_rootsum(b));
  }
}

TEST_CASE("exact zero test agrees with floating evaluation") {
  std::mt19937_64 rng(7);
  int vanishing_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    std::int64_t n = 2 + (rng() % 99);
    RootSum s = random_sum(rng, n, 10);
    if (iter % 3 == 0) {
      // plant vanishing structure: unions of full prime cycles vanish
      s = RootSum(n);
      std::int64_t p = 2;
      while (n % p != 0) ++p;
      std::int64_t cycles = 1 + rng() % 2;
      for (std::int64_t c = 0; c < cycles; ++c) {
        std::int64_t a = rng() % n;
        for (std::int64_t i = 0; i < p; ++i) s.add((a + i * (n / p)) % n, 1);
      }
    }
    bool exact_zero = is_vanishing(s);
    bool float_zero = std::abs(float_value(s)) < 1e-6;
    CHECK(exact_zero == float_zero);
    if (exact_zero) ++vanishing_seen;
  }
  CHECK(vanishing_seen > 100);  // the planted cycles must actually exercise zero
}

TEST_CASE("rational value detection") {
  Int v;
  CHECK(rational_value(RootSum(9, {0, 0, 0}), &v));
  CHECK(v == 3);
  RootSum minus_one(6, {3});
  CHECK(rational_value(minus_one, &v));
  CHECK(v == -1);
  CHECK_FALSE(rational_value(RootSum(9, {1})));
  CHECK(rational_value(RootSum(5), &v));
  CHECK(v == 0);
}

TEST_CASE("reductions are safe from concurrent workers") {
  // fresh moduli per worker force concurrent cache fills
  std::vector<std::thread> workers;
  std::vector<std::int64_t> results(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([w, &results] {
      std::mt19937_64 rng(1000 + w);
      std::int64_t acc = 0;
      for (int iter = 0; iter < 100; ++iter) {
        std::int64_t n = 2 + (rng() + w) % 140;
        RootSum s(n);
        for (int i = 0; i < 6; ++i) s.add(rng() % n, 1);
        acc += reduce_rootsum(s).is_zero() ? 1 : 0;
        acc += conductor(s).value;
      }
      results[static_cast<std::size_t>(w)] = acc;
    });
  }
  for (auto& t : workers) t.join();
  // same seeds, same answers, sequentially
  for (int w = 0; w < 4; ++w) {
    std::mt19937_64 rng(1000 + w);
    std::int64_t acc = 0;
    for (int iter = 0; iter < 100; ++iter) {
      std::int64_t n = 2 + (rng() + w) % 140;
      RootSum s(n);
      for (int i = 0; i < 6; ++i) s.add(rng() % n, 1);
      acc += reduce_rootsum(s).is_zero() ? 1 : 0;
      acc += conductor(s).value;
    }
    CHECK(acc == results[static_cast<std::size_t>(w)]);
  }
}

TEST_CASE("values_equal is the equality oracle") {
  // 1 + z + z^2 + z^3 + z^4 = 0 at N=5, so {0,1} and the complement negate
  RootSum a(5, {0, 1});
  RootSum b(5, {2, 3, 4});
  CycValue va = reduce_rootsum(a), vb = reduce_rootsum(b);
  for (std::size_t i = 0; i < va.coeffs.size(); ++i)
    CHECK(va.coeffs[i] == -vb.coeffs[i]);
  CHECK(values_equal(a, a));
  CHECK_FALSE(values_equal(a, b));
}
