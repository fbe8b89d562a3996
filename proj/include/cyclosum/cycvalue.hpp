#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "cyclosum/intpoly.hpp"
#include "cyclosum/rootsum.hpp"

// Canonical coefficient vectors modulo the N-th cyclotomic polynomial.
// Two sums of N-th roots of unity have equal value iff their reductions
// are equal; this is the exact equality oracle everything else leans on.

namespace cyclosum {

struct CycValue {
  std::int64_t modulus = 1;
  std::vector<Int> coeffs;  // length phi(modulus)

  bool is_zero() const {
    for (auto& c : coeffs)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const CycValue& a, const CycValue& b) {
    return a.modulus == b.modulus && a.coeffs == b.coeffs;
  }
  friend CycValue operator+(const CycValue& a, const CycValue& b) {
    if (a.modulus != b.modulus)
      throw std::invalid_argument("CycValue: modulus mismatch");
    CycValue r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
  }
};

namespace detail {

// Per-modulus reduction context: Phi_N and the remainders x^e mod Phi_N
// for deg(Phi_N) <= e < N, built once by exact division.
struct CycContext {
  std::int64_t modulus;
  std::int64_t deg;  // phi(modulus)
  std::vector<std::vector<Int>> rows;  // rows[e - deg] = x^e mod Phi_N

  explicit CycContext(std::int64_t n) : modulus(n) {
    const IntPoly& phi = cyclotomic_poly(n);
    deg = phi.degree();
    rows.reserve(static_cast<std::size_t>(n - deg));
    // x^deg mod Phi = x^deg - Phi (Phi is monic).
    std::vector<Int> cur(static_cast<std::size_t>(deg));
    for (std::int64_t i = 0; i < deg; ++i)
      cur[static_cast<std::size_t>(i)] = -phi.coeffs[static_cast<std::size_t>(i)];
    rows.push_back(cur);
    for (std::int64_t e = deg + 1; e < n; ++e) {
      // multiply by x, then reduce the single overflowing term
      std::vector<Int> next(static_cast<std::size_t>(deg));
      Int lead = cur[static_cast<std::size_t>(deg - 1)];
      for (std::int64_t i = deg - 1; i > 0; --i)
        next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      next[0] = 0;
      if (lead != 0)
        for (std::int64_t i = 0; i < deg; ++i)
          next[static_cast<std::size_t>(i)] += lead * rows[0][static_cast<std::size_t>(i)];
      rows.push_back(next);
      cur = std::move(next);
    }
  }
};

inline std::shared_ptr<const CycContext> cyc_context(std::int64_t n) {
  static std::map<std::int64_t, std::shared_ptr<const CycContext>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const CycContext>(n);
  cache.emplace(n, ctx);
  return ctx;
}

}  // namespace detail

// Coefficient vector of sum_e mult(e) * x^e reduced modulo Phi_N.
inline CycValue reduce_rootsum(const RootSum& s) {
  auto ctx = detail::cyc_context(s.modulus);
  CycValue v;
  v.modulus = s.modulus;
  v.coeffs.assign(static_cast<std::size_t>(ctx->deg), Int(0));
  for (auto& [e, m] : s.counts) {
    if (e < ctx->deg) {
      v.coeffs[static_cast<std::size_t>(e)] += m;
    } else {
      const auto& row = ctx->rows[static_cast<std::size_t>(e - ctx->deg)];
      for (std::int64_t i = 0; i < ctx->deg; ++i)
        v.coeffs[static_cast<std::size_t>(i)] += m * row[static_cast<std::size_t>(i)];
    }
  }
  return v;
}

inline bool is_vanishing(const RootSum& s) { return reduce_rootsum(s).is_zero(); }

inline bool values_equal(const RootSum& a, const RootSum& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument("values_equal: modulus mismatch");
  return reduce_rootsum(a) == reduce_rootsum(b);
}

// True iff the value is a rational integer; if so, *out receives it.
inline bool rational_value(const RootSum& s, Int* out = nullptr) {
  CycValue v = reduce_rootsum(s);
  for (std::size_t i = 1; i < v.coeffs.size(); ++i)
    if (v.coeffs[i] != 0) return false;
  if (out) *out = v.coeffs.empty() ? Int(0) : v.coeffs[0];
  return true;
}

}  // namespace cyclosum
