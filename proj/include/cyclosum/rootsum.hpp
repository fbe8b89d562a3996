#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cyclosum/numeric.hpp"

// Multiset sums of N-th roots of unity: the tuple-up-to-permutation model.
// An entry (e -> m) stands for m copies of z^e where z is a fixed primitive
// N-th root of unity.

namespace cyclosum {

struct RootSum {
  std::int64_t modulus = 1;
  // exponent in {0, ..., modulus-1} -> multiplicity >= 1; absent means 0.
  std::map<std::int64_t, std::int64_t> counts;

  RootSum() = default;
  explicit RootSum(std::int64_t n) : modulus(n) {
    if (n < 1) throw std::invalid_argument("RootSum: modulus must be >= 1");
  }
  RootSum(std::int64_t n, std::initializer_list<std::int64_t> exps)
      : RootSum(n) {
    for (auto e : exps) add(e, 1);
  }

  void add(std::int64_t e, std::int64_t mult) {
    if (mult == 0) return;
    if (mult < 0) throw std::invalid_argument("RootSum: negative multiplicity");
    e %= modulus;
    if (e < 0) e += modulus;
    auto [it, inserted] = counts.emplace(e, mult);
    if (!inserted) it->second += mult;
  }

  std::int64_t multiplicity(std::int64_t e) const {
    auto it = counts.find(e);
    return it == counts.end() ? 0 : it->second;
  }

  // Total length |s| of the tuple.
  std::int64_t length() const {
    std::int64_t n = 0;
    for (auto& [e, m] : counts) n += m;
    return n;
  }

  bool empty() const { return counts.empty(); }

  friend bool operator==(const RootSum& a, const RootSum& b) {
    return a.modulus == b.modulus && a.counts == b.counts;
  }
  friend bool operator<(const RootSum& a, const RootSum& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.counts < b.counts;
  }

  // Disjoint union of multisets (pointwise sum of multiplicities).
  friend RootSum operator+(const RootSum& a, const RootSum& b) {
    if (a.modulus != b.modulus)
      throw std::invalid_argument("RootSum: modulus mismatch");
    RootSum r = a;
    for (auto& [e, m] : b.counts) r.add(e, m);
    return r;
  }
};

// Multiplicative order of z^e, i.e. N / gcd(N, e).
inline std::int64_t order_of_entry(std::int64_t e, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("order_of_entry: modulus must be >= 1");
  if (e < 0 || e >= n)
    throw std::invalid_argument("order_of_entry: exponent out of range");
  return n / std::gcd(n, e);
}

// Entry/distinct-entry counts per order. Only p-power orders are reported;
// at a p-power modulus that covers every entry.
struct OrderStats {
  std::map<std::int64_t, std::int64_t> lambda;        // order -> entry count
  std::map<std::int64_t, std::int64_t> tilde_lambda;  // order -> distinct count

  std::int64_t lambda_at(std::int64_t m) const {
    auto it = lambda.find(m);
    return it == lambda.end() ? 0 : it->second;
  }
  std::int64_t tilde_at(std::int64_t m) const {
    auto it = tilde_lambda.find(m);
    return it == tilde_lambda.end() ? 0 : it->second;
  }
};

inline bool is_power_of(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline OrderStats stats(const RootSum& s, std::int64_t p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("stats: p must be an odd prime");
  OrderStats st;
  for (auto& [e, m] : s.counts) {
    std::int64_t o = order_of_entry(e, s.modulus);
    if (!is_power_of(o, p)) continue;
    st.lambda[o] += m;
    st.tilde_lambda[o] += 1;
  }
  return st;
}

// The subsum s^(m): all entries of order exactly m.
inline RootSum subsum_of_order(const RootSum& s, std::int64_t m) {
  RootSum r(s.modulus);
  for (auto& [e, mult] : s.counts)
    if (order_of_entry(e, s.modulus) == m) r.add(e, mult);
  return r;
}

// Exponent map e -> a*e mod N. For units a this realizes the Galois action.
inline RootSum apply_exponent_map(const RootSum& s, std::int64_t a) {
  RootSum r(s.modulus);
  for (auto& [e, m] : s.counts)
    r.add(static_cast<std::int64_t>((__int128)a * e % s.modulus), m);
  return r;
}

// Divide modulus and all exponents by d. Precondition: d | N and d divides
// every stored exponent (i.e. every entry is a root of order dividing N/d).
inline RootSum rescale_down(const RootSum& s, std::int64_t d) {
  if (d < 1 || s.modulus % d != 0)
    throw std::invalid_argument("rescale_down: d must divide the modulus");
  RootSum r(s.modulus / d);
  for (auto& [e, m] : s.counts) {
    if (e % d != 0)
      throw std::invalid_argument("rescale_down: exponent not divisible by d");
    r.add(e / d, m);
  }
  return r;
}

// Textual form `N:e1^m1,e2^m2,...` with ascending exponents; `N:` when empty.
inline std::string to_string(const RootSum& s) {
  std::string out = std::to_string(s.modulus) + ":";
  bool first = true;
  for (auto& [e, m] : s.counts) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e) + "^" + std::to_string(m);
  }
  return out;
}

inline RootSum parse_rootsum(const std::string& text) {
  std::size_t pos = 0;
  std::int64_t n = detail::parse_int64(text, pos);
  if (n < 1) throw parse_error("modulus must be >= 1", 0);
  if (pos >= text.size() || text[pos] != ':')
    throw parse_error("expected ':' after modulus", pos);
  ++pos;
  RootSum s(n);
  if (pos == text.size()) return s;  // empty sum
  std::int64_t prev_exp = -1;
  while (true) {
    std::size_t exp_pos = pos;
    std::int64_t e = detail::parse_int64(text, pos);
    if (e < 0 || e >= n) throw parse_error("exponent out of range", exp_pos);
    if (e <= prev_exp) throw parse_error("exponents must be ascending", exp_pos);
    prev_exp = e;
    if (pos >= text.size() || text[pos] != '^')
      throw parse_error("expected '^'", pos);
    ++pos;
    std::size_t mult_pos = pos;
    std::int64_t m = detail::parse_int64(text, pos);
    if (m < 1) throw parse_error("multiplicity must be >= 1", mult_pos);
    s.add(e, m);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw parse_error("expected ','", pos);
    ++pos;
  }
  return s;
}

}  // namespace cyclosum
