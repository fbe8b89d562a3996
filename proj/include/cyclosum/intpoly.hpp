#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "cyclosum/numeric.hpp"

// Exact integer polynomials in one variable, plus cyclotomic polynomial
// generation. Coefficients are arbitrary-precision; there are no modular
// shortcuts anywhere in the division path.

namespace cyclosum {

struct IntPoly {
  // coeffs[i] is the coefficient of x^i; highest-index entry nonzero
  // unless the polynomial is zero (empty vector).
  std::vector<Int> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs.push_back(std::move(c));
    return p;
  }
  // x^n - 1
  static IntPoly xn_minus_1(std::int64_t n) {
    IntPoly p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, Int(0));
    p.coeffs[0] = -1;
    p.coeffs[static_cast<std::size_t>(n)] = 1;
    return p;
  }
  static IntPoly monomial(std::int64_t n, Int c = Int(1)) {
    IntPoly p;
    if (c != 0) {
      p.coeffs.assign(static_cast<std::size_t>(n) + 1, Int(0));
      p.coeffs[static_cast<std::size_t>(n)] = std::move(c);
    }
    return p;
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  bool is_zero() const { return coeffs.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs.size()) - 1;
  }
  const Int& coeff(std::size_t i) const {
    static const Int kZero{0};
    return i < coeffs.size() ? coeffs[i] : kZero;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs == b.coeffs;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      r.coeffs[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < r.coeffs.size(); ++i)
      r.coeffs[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    IntPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.normalize();
    return r;
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }
};

// Euclidean division by a monic divisor. Returns {quotient, remainder}.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& num,
                                                const IntPoly& den) {
  if (den.is_zero() || den.coeffs.back() != 1)
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  IntPoly rem = num;
  IntPoly quot;
  const std::int64_t dd = den.degree();
  if (rem.degree() >= dd)
    quot.coeffs.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Int(0));
  while (rem.degree() >= dd) {
    const std::int64_t shift = rem.degree() - dd;
    Int c = rem.coeffs.back();
    quot.coeffs[static_cast<std::size_t>(shift)] = c;
    for (std::int64_t i = 0; i <= dd; ++i)
      rem.coeffs[static_cast<std::size_t>(shift + i)] -=
          c * den.coeffs[static_cast<std::size_t>(i)];
    rem.normalize();
  }
  quot.normalize();
  return {std::move(quot), std::move(rem)};
}

inline IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  auto [q, r] = divmod_monic(num, den);
  if (!r.is_zero())
    throw std::logic_error("divide_exact: division left a remainder");
  return q;
}

// The m-th cyclotomic polynomial, computed by dividing x^m - 1 by the
// product of Phi_d over proper divisors d of m. Results are memoized;
// the cache is guarded so concurrent workers can share it.
inline const IntPoly& cyclotomic_poly(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
  static std::map<std::int64_t, IntPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Fill the cache bottom-up over divisors so recursion never re-locks.
  for (std::int64_t d : divisors(m)) {
    if (cache.count(d)) continue;
    IntPoly num = IntPoly::xn_minus_1(d);
    for (std::int64_t e : divisors(d))
      if (e != d) num = divide_exact(num, cache.at(e));
    cache.emplace(d, std::move(num));
  }
  return cache.at(m);
}

}  // namespace cyclosum
