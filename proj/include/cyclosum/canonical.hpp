#pragma once

#include <algorithm>
#include <limits>
#include <set>

#include "cyclosum/cycvalue.hpp"

// Canonical minimal representatives at odd prime-power moduli, minimality
// and vanishing tests, exhaustive enumeration of minimal vanishing sums,
// and the conductor / Galois-index machinery.

namespace cyclosum {

inline constexpr std::int64_t kDefaultSubsetBudget = 12;

namespace detail {
inline std::pair<std::int64_t, std::int64_t> require_odd_prime_power(
    const RootSum& s, const char* who) {
  auto [p, k] = prime_power_split(s.modulus);
  if (p == 0 || p == 2 || k < 2)
    throw std::invalid_argument(std::string(who) +
                                ": modulus must be p^k with p an odd prime, k >= 2");
  return {p, k};
}
}  // namespace detail

// Unique minimal representative of the value class of s at modulus p^k
// (p odd, k >= 2). Minimal vanishing subsums are exactly rotated p-cycles
// {a, a+p^(k-1), ..., a+(p-1)p^(k-1)}; stripping the minimum multiplicity
// across every cycle leaves a sum with no non-empty vanishing subsum.
inline RootSum canonical_minimal(const RootSum& s) {
  auto [p, k] = detail::require_odd_prime_power(s, "canonical_minimal");
  const std::int64_t n = s.modulus;
  const std::int64_t step = n / p;  // p^(k-1)
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (auto& [e, m] : s.counts) c[static_cast<std::size_t>(e)] = m;
  RootSum out(n);
  for (std::int64_t a = 0; a < step; ++a) {
    std::int64_t low = c[static_cast<std::size_t>(a)];
    for (std::int64_t i = 1; i < p; ++i)
      low = std::min(low, c[static_cast<std::size_t>(a + i * step)]);
    for (std::int64_t i = 0; i < p; ++i) {
      std::int64_t rest = c[static_cast<std::size_t>(a + i * step)] - low;
      if (rest > 0) out.add(a + i * step, rest);
    }
  }
  return out;
}

// True iff no non-empty proper subsequence of s vanishes. Exhaustive over
// the 2^|s| subsequences, using exact reduction.
inline bool is_minimal(const RootSum& s,
                       std::int64_t budget = kDefaultSubsetBudget) {
  if (budget > 30) throw std::invalid_argument("is_minimal: budget > 30");
  const std::int64_t len = s.length();
  if (len > budget)
    throw budget_error("is_minimal: length " + std::to_string(len) +
                       " exceeds subset budget " + std::to_string(budget));
  std::vector<std::int64_t> exps;
  exps.reserve(static_cast<std::size_t>(len));
  for (auto& [e, m] : s.counts)
    for (std::int64_t i = 0; i < m; ++i) exps.push_back(e);
  const std::uint64_t full = std::uint64_t(1) << len;
  for (std::uint64_t mask = 1; mask + 1 < full; ++mask) {
    RootSum sub(s.modulus);
    for (std::int64_t i = 0; i < len; ++i)
      if (mask & (std::uint64_t(1) << i)) sub.add(exps[static_cast<std::size_t>(i)], 1);
    if (is_vanishing(sub)) return false;
  }
  return true;
}

// Lexicographically least rotation of the expanded exponent sequence:
// the canonical representative of the rotation class.
inline RootSum rotation_canonical(const RootSum& s) {
  std::vector<std::int64_t> exps;
  for (auto& [e, m] : s.counts)
    for (std::int64_t i = 0; i < m; ++i) exps.push_back(e);
  if (exps.empty()) return s;
  std::vector<std::int64_t> best, cur(exps.size());
  for (std::int64_t c = 0; c < s.modulus; ++c) {
    for (std::size_t i = 0; i < exps.size(); ++i)
      cur[i] = (exps[i] + c) % s.modulus;
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  RootSum out(s.modulus);
  for (auto e : best) out.add(e, 1);
  return out;
}

// All vanishing minimal sums of length <= max_len at modulus N, one
// representative per rotation class. Exact meet-in-the-middle: sorted
// exponent tuples starting at 0 are split into a prefix and a suffix
// matched through their reduced values.
inline std::vector<RootSum> enumerate_minimal_vanishing(
    std::int64_t n, std::int64_t max_len,
    std::int64_t subset_budget = kDefaultSubsetBudget) {
  if (n < 1) throw std::invalid_argument("enumerate_minimal_vanishing: bad modulus");
  if (max_len > 12)
    throw budget_error("enumerate_minimal_vanishing: max_len > 12");
  std::set<RootSum> classes;

  // Reduced values in these searches have coefficients bounded by
  // max_len * max|Phi-row entry|; narrow them for compact map keys.
  using Key = std::vector<std::int64_t>;
  auto narrow = [](const CycValue& v) {
    Key k(v.coeffs.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (v.coeffs[i] < std::numeric_limits<std::int32_t>::min() ||
          v.coeffs[i] > std::numeric_limits<std::int32_t>::max())
        throw std::logic_error("enumerate_minimal_vanishing: coefficient overflow");
      k[i] = static_cast<std::int64_t>(v.coeffs[i]);
    }
    return k;
  };

  // Sorted multisets of given size over {0, ..., n-1}, keyed by reduced value.
  auto build_suffixes = [&](std::int64_t size) {
    std::map<Key, std::vector<std::vector<std::int64_t>>> by_value;
    std::vector<std::int64_t> stack;
    auto rec = [&](auto&& self, std::int64_t lo) -> void {
      if (static_cast<std::int64_t>(stack.size()) == size) {
        RootSum s(n);
        for (auto e : stack) s.add(e, 1);
        by_value[narrow(reduce_rootsum(s))].push_back(stack);
        return;
      }
      for (std::int64_t e = lo; e < n; ++e) {
        stack.push_back(e);
        self(self, e);
        stack.pop_back();
      }
    };
    rec(rec, 0);
    return by_value;
  };

  for (std::int64_t len = 2; len <= max_len; ++len) {
    const std::int64_t h2 = len / 2;
    const std::int64_t h1 = len - h2;
    auto suffixes = build_suffixes(h2);
    // Prefixes are sorted tuples starting with exponent 0 (rotation pinned).
    std::vector<std::int64_t> stack{0};
    auto rec = [&](auto&& self, std::int64_t lo) -> void {
      if (static_cast<std::int64_t>(stack.size()) == h1) {
        RootSum left(n);
        for (auto e : stack) left.add(e, 1);
        Key want = narrow(reduce_rootsum(left));
        for (auto& c : want) c = -c;
        auto it = suffixes.find(want);
        if (it == suffixes.end()) return;
        const std::int64_t left_max = stack.back();
        for (const auto& suffix : it->second) {
          if (suffix.front() < left_max) continue;
          RootSum cand = left;
          for (auto e : suffix) cand.add(e, 1);
          if (!is_minimal(cand, subset_budget)) continue;
          classes.insert(rotation_canonical(cand));
        }
        return;
      }
      for (std::int64_t e = lo; e < n; ++e) {
        stack.push_back(e);
        self(self, e);
        stack.pop_back();
      }
    };
    rec(rec, 0);
  }
  return {classes.begin(), classes.end()};
}

struct Conductor {
  std::int64_t value = 1;
  std::int64_t p_part(std::int64_t p) const { return int_p_part(value, p).first; }
  // prime -> full p-part (p^a) of the value.
  std::map<std::int64_t, std::int64_t> decompose() const {
    std::map<std::int64_t, std::int64_t> parts;
    std::int64_t v = value;
    for (std::int64_t p = 2; p * p <= v; ++p) {
      std::int64_t pp = 1;
      while (v % p == 0) {
        v /= p;
        pp *= p;
      }
      if (pp > 1) parts[p] = pp;
    }
    if (v > 1) parts[v] = v;
    return parts;
  }
  friend bool operator==(const Conductor& a, const Conductor& b) {
    return a.value == b.value;
  }
};

namespace detail {
// True iff the value of s is fixed by every unit a == 1 (mod f).
inline bool invariant_under_stabilizer_of(const RootSum& s, const CycValue& base,
                                          std::int64_t f) {
  const std::int64_t n = s.modulus;
  for (std::int64_t a = 1; a < n; a += f) {
    if (a == 1 || std::gcd(a, n) != 1) continue;
    if (!(reduce_rootsum(apply_exponent_map(s, a)) == base)) return false;
  }
  return true;
}
}  // namespace detail

// Smallest f with value(s) in Q_f, found by the Galois-invariance search
// over divisors of N. Candidates f == 2 (mod 4) are skipped since
// Q_f = Q_{f/2}.
inline Conductor conductor(const RootSum& s) {
  const CycValue base = reduce_rootsum(s);
  for (std::int64_t f : divisors(s.modulus)) {
    if (f % 4 == 2) continue;
    if (detail::invariant_under_stabilizer_of(s, base, f)) return Conductor{f};
  }
  return Conductor{s.modulus};  // f = N always passes; unreachable fallback
}

// Number of units a of Z/N whose exponent action fixes the value of s;
// equals [Q_N : Q(s)]. Full enumeration of the unit group.
inline std::int64_t galois_stabilizer_size_bruteforce(const RootSum& s) {
  const CycValue base = reduce_rootsum(s);
  const std::int64_t n = s.modulus;
  std::int64_t count = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    if (reduce_rootsum(apply_exponent_map(s, a)) == base) ++count;
  }
  return n == 1 ? 1 : count;
}

// Same result; when (Z/N)^x is cyclic the stabilizer is the unique
// subgroup <g^t> for the least divisor t of phi(N) fixing the value,
// so only divisors of phi(N) need testing.
inline std::int64_t galois_stabilizer_size(const RootSum& s) {
  const std::int64_t n = s.modulus;
  if (n <= 2) return 1;
  if (!units_cyclic(n)) return galois_stabilizer_size_bruteforce(s);
  const CycValue base = reduce_rootsum(s);
  const std::int64_t phi = totient(n);
  const std::int64_t g = unit_group_generator(n);
  for (std::int64_t t : divisors(phi)) {
    std::int64_t a = mod_pow(g, t, n);
    if (reduce_rootsum(apply_exponent_map(s, a)) == base) return phi / t;
  }
  return 1;  // t = phi gives a = 1, which always fixes; unreachable
}

// Full-conductor predicate: f_s = p^k iff the canonical minimal
// representative keeps an entry of order exactly p^k.
inline bool conductor_is_full(const RootSum& s, std::int64_t p, std::int64_t k) {
  auto [pp, kk] = detail::require_odd_prime_power(s, "conductor_is_full");
  if (pp != p || kk != k)
    throw std::invalid_argument("conductor_is_full: modulus is not p^k");
  RootSum canon = canonical_minimal(s);
  return !subsum_of_order(canon, s.modulus).empty();
}

// Index-divisibility predicate: p | [Q_{p^k} : Q(s)] iff the primitive part
// vanishes, i.e. canonicalization leaves no entry of order p^k.
inline bool p_divides_index(const RootSum& s, std::int64_t p, std::int64_t k) {
  auto [pp, kk] = detail::require_odd_prime_power(s, "p_divides_index");
  if (pp != p || kk != k)
    throw std::invalid_argument("p_divides_index: modulus is not p^k");
  RootSum canon = canonical_minimal(s);
  return subsum_of_order(canon, s.modulus).empty();
}

// p-part of the conductor of a sum at a p-power modulus, computed through
// the canonical-form route alone (independent of the divisor search):
// strip cycles; if a primitive entry survives the conductor is full,
// otherwise every exponent is divisible by p and the sum contracts.
inline std::int64_t conductor_p_part_via_canonical(RootSum s, std::int64_t p) {
  if (s.modulus == 1) return 1;
  auto [pp, k] = prime_power_split(s.modulus);
  if (pp != p) throw std::invalid_argument("conductor_p_part_via_canonical: modulus");
  while (k >= 2) {
    s = canonical_minimal(s);
    if (!subsum_of_order(s, s.modulus).empty()) return s.modulus;
    s = rescale_down(s, p);
    --k;
  }
  // k <= 1: conductor p iff the value is irrational.
  if (s.modulus == 1) return 1;
  return rational_value(s) ? 1 : p;
}

}  // namespace cyclosum
