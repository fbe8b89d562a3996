#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Shared exact-arithmetic aliases and small number-theoretic helpers used
// across the library. Everything here is pure and allocation-cheap; the
// heavy lifting lives in the per-module headers.

namespace cyclosum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an operation would exceed one of the documented enumeration
// budgets. The CLI maps this to exit code 2.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on malformed textual input; carries a 0-based position into the
// offending string.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& what, std::size_t pos_)
      : std::runtime_error(what + " (at position " + std::to_string(pos_) + ")"),
        pos(pos_) {}
};

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

namespace detail {
inline std::int64_t parse_int64(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits) throw parse_error("expected integer", start);
  try {
    return std::stoll(text.substr(start, pos - start));
  } catch (const std::exception&) {
    throw parse_error("integer out of range", start);
  }
}
}  // namespace detail

// n = p_part * p_prime_part with p_part the largest power of p dividing n.
inline std::pair<std::int64_t, std::int64_t> int_p_part(std::int64_t n,
                                                        std::int64_t p) {
  if (n < 1) throw std::invalid_argument("int_p_part: n must be >= 1");
  if (p < 2) throw std::invalid_argument("int_p_part: p must be >= 2");
  std::int64_t pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return {pp, n};
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^e with p prime, e >= 1; returns p, or 0 if q is not a prime power.
inline std::int64_t prime_power_base(std::int64_t q) {
  if (q < 2) return 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      while (q % d == 0) q /= d;
      return q == 1 ? d : 0;
    }
  }
  return q;  // prime
}

inline bool is_prime_power(std::int64_t q) { return prime_power_base(q) != 0; }

// N = p^k exactly; returns (p, k) or (0, 0).
inline std::pair<std::int64_t, std::int64_t> prime_power_split(std::int64_t n) {
  std::int64_t p = prime_power_base(n);
  if (p == 0) return {0, 0};
  std::int64_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return {p, k};
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::int64_t totient(std::int64_t n) {
  std::int64_t result = n, m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::int64_t mobius(std::int64_t n) {
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp,
                            std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % mod);
    base = static_cast<std::int64_t>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

// Units of Z/N are cyclic iff N in {1, 2, 4, p^k, 2 p^k} for odd prime p.
inline bool units_cyclic(std::int64_t n) {
  if (n <= 4) return true;
  if (n % 4 == 0) return false;
  auto [p, k] = prime_power_split(n % 2 == 0 ? n / 2 : n);
  return p != 0 && p != 2;
}

// Smallest generator of (Z/N)^x; precondition: units_cyclic(N).
inline std::int64_t unit_group_generator(std::int64_t n) {
  if (n <= 2) return 1;
  std::int64_t phi = totient(n);
  std::vector<std::int64_t> prime_factors;
  std::int64_t m = phi;
  for (std::int64_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      prime_factors.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) prime_factors.push_back(m);
  for (std::int64_t g = 2; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    bool ok = true;
    for (std::int64_t p : prime_factors)
      if (mod_pow(g, phi / p, n) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("unit_group_generator: no generator found");
}

inline Int int_pow(Int base, std::int64_t exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace cyclosum
