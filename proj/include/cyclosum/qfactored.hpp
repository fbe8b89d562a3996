#pragma once

#include <map>
#include <sstream>

#include "cyclosum/intpoly.hpp"

// Factored rational functions in the formal variable q: a nonzero rational
// times q^e times a product of cyclotomic polynomials Phi_d(q)^(e_d).
// Character degrees and their building blocks live here; the valuation at
// Phi_m is a single map lookup by construction.

namespace cyclosum {

struct CycFactored {
  Rat rational = 1;
  std::int64_t qpow = 0;
  std::map<std::int64_t, std::int64_t> cyc_exps;  // d -> exponent of Phi_d(q)

  CycFactored() = default;
  explicit CycFactored(Rat r) : rational(std::move(r)) {
    if (rational == 0) throw std::invalid_argument("CycFactored: zero rational");
  }

  static CycFactored one() { return CycFactored{}; }

  void prune() {
    for (auto it = cyc_exps.begin(); it != cyc_exps.end();)
      it = it->second == 0 ? cyc_exps.erase(it) : std::next(it);
  }

  bool is_one() const {
    return rational == 1 && qpow == 0 && cyc_exps.empty();
  }

  // All exponents nonnegative and the rational part an integer: the value
  // is an integer polynomial in q.
  bool is_polynomial() const {
    if (qpow < 0) return false;
    for (auto& [d, e] : cyc_exps)
      if (e < 0) return false;
    return boost::multiprecision::denominator(rational) == 1;
  }

  friend bool operator==(const CycFactored& a, const CycFactored& b) {
    return a.rational == b.rational && a.qpow == b.qpow &&
           a.cyc_exps == b.cyc_exps;
  }
};

inline CycFactored factored_mul(const CycFactored& a, const CycFactored& b) {
  CycFactored r = a;
  r.rational *= b.rational;
  r.qpow += b.qpow;
  for (auto& [d, e] : b.cyc_exps) r.cyc_exps[d] += e;
  r.prune();
  return r;
}

inline CycFactored factored_div(const CycFactored& a, const CycFactored& b) {
  CycFactored r = a;
  r.rational /= b.rational;
  r.qpow -= b.qpow;
  for (auto& [d, e] : b.cyc_exps) r.cyc_exps[d] -= e;
  r.prune();
  return r;
}

// q^j - 1 = prod_{d | j} Phi_d(q).
inline CycFactored qj_minus_1(std::int64_t j) {
  if (j < 1) throw std::invalid_argument("qj_minus_1: j must be >= 1");
  CycFactored r;
  for (std::int64_t d : divisors(j)) r.cyc_exps[d] = 1;
  return r;
}

// 1 - q^j = -(q^j - 1); the sign is folded into the rational part at once.
inline CycFactored one_minus_qj(std::int64_t j) {
  CycFactored r = qj_minus_1(j);
  r.rational = -1;
  return r;
}

// Psi_i(q^e) = prod_{j=1..i} (q^(e*j) - 1); Psi_0 is the empty product.
inline CycFactored psi_scaled(std::int64_t i, std::int64_t e) {
  if (i < 0) throw std::invalid_argument("psi_scaled: i must be >= 0");
  CycFactored r;
  for (std::int64_t j = 1; j <= i; ++j)
    r = factored_mul(r, qj_minus_1(e * j));
  return r;
}

inline CycFactored psi(std::int64_t i) { return psi_scaled(i, 1); }

// Exact evaluation at an integer q0 >= 2 by substituting into each factor.
inline Rat evaluate(const CycFactored& f, std::int64_t q0) {
  if (q0 < 2) throw std::invalid_argument("evaluate: q0 must be >= 2");
  Rat result = f.rational;
  Int q{q0};
  if (f.qpow >= 0)
    result *= Rat(int_pow(q, f.qpow));
  else
    result /= Rat(int_pow(q, -f.qpow));
  for (auto& [d, e] : f.cyc_exps) {
    Int v = cyclotomic_poly(d).eval(q);
    if (v == 0 && e < 0)
      throw std::domain_error("evaluate: Phi_d(q0) = 0 with negative exponent");
    if (e >= 0)
      result *= Rat(int_pow(v, e));
    else
      result /= Rat(int_pow(v, -e));
  }
  return result;
}

// Exponent of Phi_m in f (0 when absent): the valuation used throughout
// the degree-divisibility arguments.
inline std::int64_t valuation_F(const CycFactored& f, std::int64_t m) {
  auto it = f.cyc_exps.find(m);
  return it == f.cyc_exps.end() ? 0 : it->second;
}

inline std::string to_string(const CycFactored& f) {
  std::ostringstream os;
  os << f.rational;
  if (f.qpow != 0) os << " * q^" << f.qpow;
  for (auto& [d, e] : f.cyc_exps) {
    os << " * Phi" << d;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace cyclosum
