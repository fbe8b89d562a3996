#pragma once

#include <functional>
#include <optional>

#include "cyclosum/canonical.hpp"

// Witness-class verifiers for GL_n(q) and SL_n(q) at primes p | (q-1):
// enumerate the degree-1-type characters as parameter multisets, build the
// certifying conjugacy class, count permutation residues, and report a
// verdict per character.

namespace cyclosum {

inline constexpr std::int64_t kDefaultPermBudget = 9;

struct DegreeOneChar {
  std::int64_t q = 2;
  std::int64_t n = 1;
  std::vector<std::int64_t> params;  // multiset of exponents mod q-1, ascending

  void validate() const {
    if (static_cast<std::int64_t>(params.size()) != n)
      throw std::invalid_argument("DegreeOneChar: multiset size must be n");
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] < 0 || params[i] > q - 2)
        throw std::invalid_argument("DegreeOneChar: exponent out of range");
      if (i > 0 && params[i] < params[i - 1])
        throw std::invalid_argument("DegreeOneChar: params must be ascending");
    }
  }
};

struct ClassParams {
  std::int64_t q = 2;
  std::int64_t n = 1;
  std::vector<std::int64_t> params;  // pairwise distinct exponents mod q-1

  void validate() const {
    if (static_cast<std::int64_t>(params.size()) != n)
      throw std::invalid_argument("ClassParams: need n parameters");
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] < 0 || params[i] > q - 2)
        throw std::invalid_argument("ClassParams: exponent out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (params[i] == params[j])
          throw std::invalid_argument("ClassParams: parameters must be distinct");
    }
  }

  // determinant exponent sum a_i == 0 mod (q-1): the class lies in SL_n(q)
  bool in_sl() const {
    std::int64_t sum = 0;
    for (auto a : params) sum = (sum + a) % (q - 1);
    return sum == 0;
  }
};

enum class Branch {
  generic,
  congruent_remark45,
  sl_branch,
  lemma21_trivial,
  not_applicable_p_divides_degree,
};

enum class Verdict { holds, holds_trivially, no_statement, fails };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::generic: return "generic";
    case Branch::congruent_remark45: return "congruent-remark45";
    case Branch::sl_branch: return "sl-branch";
    case Branch::lemma21_trivial: return "lemma21-trivial";
    case Branch::not_applicable_p_divides_degree:
      return "not-applicable-p-divides-degree";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_trivially: return "holds-trivially";
    case Verdict::no_statement: return "no-statement";
    case Verdict::fails: return "fails";
  }
  return "?";
}

struct WitnessReport {
  DegreeOneChar chi;
  std::int64_t p = 3;
  std::int64_t k_prime = 1;          // p-part of gcd(q-1, k_1, ..., k_n)
  std::int64_t m = 0;                // congruence depth (SL branch); -1 = infinite
  std::int64_t f_prime_p = 1;        // certified p-power
  std::optional<ClassParams> cls;    // witness class when one was built
  std::vector<std::int64_t> l_counts;
  Branch branch = Branch::lemma21_trivial;
  bool in_sl = false;
  Verdict verdict = Verdict::holds_trivially;
};

// Builds the witness class with parameters
//   a_i = i * step * (q-1)_{p'}          for i in {1, ..., n-3}
//   a_{n-2} = j * step * (q-1)_{p'}      least j with (q-1) | (a_1+...+a_{n-2})
//   a_{n-1} = (q-1)_{p'},  a_n = q-1 - (q-1)_{p'}
// (step = p, or p^(m+1) on the SL branch). Parameters are residues mod q-1,
// residue 0 standing for the exponent q-1. Degenerate n: missing slots are
// absent, and the divisibility constraint is vacuous when the i-range is
// empty; for n = 2 only the last two slots exist, for n = 1 only a_n.
inline ClassParams construct_class_generic(std::int64_t n, std::int64_t q,
                                           std::int64_t p, std::int64_t step) {
  if ((q - 1) % p != 0)
    throw std::invalid_argument("construct_class: p must divide q-1");
  auto [qp, u] = int_p_part(q - 1, p);
  if (qp < p * p)
    throw std::invalid_argument("construct_class: generic scheme needs p^2 | (q-1)");
  const std::int64_t mod = q - 1;
  ClassParams cls;
  cls.q = q;
  cls.n = n;
  std::vector<bool> used(static_cast<std::size_t>(mod), false);
  auto push = [&](std::int64_t r) {
    if (used[static_cast<std::size_t>(r)])
      throw std::domain_error("construct_class: parameters collide at this (n,q,p)");
    used[static_cast<std::size_t>(r)] = true;
    cls.params.push_back(r);
  };
  if (n == 1) {
    push(mod - u);
    cls.validate();
    return cls;
  }
  const std::int64_t u_res = u % mod;
  const std::int64_t v_res = mod - u;  // u < q-1 since (q-1)_p > 1
  used[static_cast<std::size_t>(u_res)] = true;
  used[static_cast<std::size_t>(v_res)] = true;
  std::int64_t partial = 0;
  for (std::int64_t i = 1; i <= n - 3; ++i) {
    std::int64_t r =
        static_cast<std::int64_t>((__int128)i * step % mod * u % mod);
    push(r);
    partial = (partial + r) % mod;
  }
  if (n >= 3) {
    bool found = false;
    for (std::int64_t j = 1; j <= mod; ++j) {
      std::int64_t cand =
          static_cast<std::int64_t>((__int128)j * step % mod * u % mod);
      if ((partial + cand) % mod != 0) continue;
      if (used[static_cast<std::size_t>(cand)]) continue;
      push(cand);
      found = true;
      break;
    }
    if (!found)
      throw std::domain_error("construct_class: no admissible j at this (n,q,p)");
  }
  used[static_cast<std::size_t>(u_res)] = false;
  used[static_cast<std::size_t>(v_res)] = false;
  push(u_res);
  push(v_res);
  cls.validate();
  return cls;
}

// The alternative scheme: a_i = i * p * (q-1)_{p'} for i < n, a_n = (q-1)_{p'}.
// Its determinant exponent is not 0, so these classes avoid SL_n(q).
inline ClassParams construct_class_congruent(std::int64_t n, std::int64_t q,
                                             std::int64_t p) {
  if ((q - 1) % p != 0)
    throw std::invalid_argument("construct_class: p must divide q-1");
  auto [qp, u] = int_p_part(q - 1, p);
  const std::int64_t mod = q - 1;
  ClassParams cls;
  cls.q = q;
  cls.n = n;
  std::vector<bool> used(static_cast<std::size_t>(mod), false);
  auto push = [&](std::int64_t r) {
    if (used[static_cast<std::size_t>(r)])
      throw std::domain_error("construct_class: parameters collide at this (n,q,p)");
    used[static_cast<std::size_t>(r)] = true;
    cls.params.push_back(r);
  };
  for (std::int64_t i = 1; i <= n - 1; ++i)
    push(static_cast<std::int64_t>((__int128)i * p % mod * u % mod));
  push(u % mod);
  cls.validate();
  return cls;
}

enum class ClassScheme { generic, congruent };

inline ClassParams construct_class(const DegreeOneChar& chi, std::int64_t p,
                                   ClassScheme scheme, std::int64_t step = 0) {
  chi.validate();
  if (scheme == ClassScheme::generic)
    return construct_class_generic(chi.n, chi.q, p, step == 0 ? p : step);
  return construct_class_congruent(chi.n, chi.q, p);
}

namespace detail {

// Visit distinct arrangements of the ascending multiset `values`; each
// arrangement stands for `weight` = prod (multiplicity!) permutations.
template <typename F>
void for_each_arrangement(std::vector<std::int64_t> values, F&& f) {
  std::int64_t weight = 1, run = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    run = values[i] == values[i - 1] ? run + 1 : 1;
    weight *= run;
  }
  do {
    f(values, weight);
  } while (std::next_permutation(values.begin(), values.end()));
}

// counts[r] = #{sigma in S_n : sum_i a_i k_{sigma(i)} == r (mod m)}.
// Direct enumeration of distinct arrangements up to the budget; beyond it,
// a permutation-free dynamic program over running residues indexed by
// value-usage states (mixed radix over the multiplicities).
inline std::vector<std::int64_t> residue_profile(
    const std::vector<std::int64_t>& k_sorted,
    const std::vector<std::int64_t>& a, std::int64_t m,
    std::int64_t budget_perms) {
  const std::int64_t n = static_cast<std::int64_t>(k_sorted.size());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  if (n <= budget_perms) {
    for_each_arrangement(
        k_sorted, [&](const std::vector<std::int64_t>& k, std::int64_t weight) {
          std::int64_t t = 0;
          for (std::size_t i = 0; i < k.size(); ++i)
            t = static_cast<std::int64_t>((t + (__int128)a[i] * k[i]) % m);
          counts[static_cast<std::size_t>(t)] += weight;
        });
    return counts;
  }
  std::vector<std::int64_t> vals, mult;
  for (auto v : k_sorted) {
    if (vals.empty() || vals.back() != v) {
      vals.push_back(v);
      mult.push_back(1);
    } else {
      ++mult.back();
    }
  }
  std::vector<std::int64_t> radix(vals.size() + 1, 1);
  for (std::size_t j = 0; j < vals.size(); ++j)
    radix[j + 1] = radix[j] * (mult[j] + 1);
  const std::int64_t states = radix.back();
  if (states > 50000000 / m)
    throw budget_error("residue profile: DP state space too large");
  std::vector<std::int64_t> dp(static_cast<std::size_t>(states * m), 0);
  dp[0] = 1;
  // Transitions strictly increase the mixed-radix state index, so a single
  // ascending sweep is a valid topological order.
  for (std::int64_t st = 0; st + 1 < states; ++st) {
    std::int64_t pos = 0;
    for (std::size_t j = 0; j < vals.size(); ++j)
      pos += st / radix[j] % (mult[j] + 1);
    const std::int64_t coeff = a[static_cast<std::size_t>(pos)] % m;
    for (std::int64_t r = 0; r < m; ++r) {
      std::int64_t ways = dp[static_cast<std::size_t>(st * m + r)];
      if (ways == 0) continue;
      for (std::size_t j = 0; j < vals.size(); ++j) {
        if (st / radix[j] % (mult[j] + 1) == mult[j]) continue;
        std::int64_t nst = st + radix[j];
        std::int64_t nr = static_cast<std::int64_t>(
            (r + (__int128)coeff * vals[j]) % m);
        dp[static_cast<std::size_t>(nst * m + nr)] += ways;
      }
    }
  }
  std::int64_t weight = 1;
  for (auto c : mult)
    for (std::int64_t i = 2; i <= c; ++i) weight *= i;
  for (std::int64_t r = 0; r < m; ++r)
    counts[static_cast<std::size_t>(r)] =
        dp[static_cast<std::size_t>((states - 1) * m + r)] * weight;
  return counts;
}

}  // namespace detail

// The permutation sum S as a multiset of n! exponents
// sum_i a_i k_{sigma(i)} mod (q-1), one entry per sigma in S_n.
inline RootSum s_value(const DegreeOneChar& chi, const ClassParams& cls,
                       std::int64_t budget_perms = kDefaultPermBudget) {
  chi.validate();
  cls.validate();
  if (chi.q != cls.q || chi.n != cls.n)
    throw std::invalid_argument("s_value: character/class mismatch");
  const std::int64_t mod = chi.q - 1;
  auto counts =
      detail::residue_profile(chi.params, cls.params, mod, budget_perms);
  RootSum s(mod);
  for (std::int64_t r = 0; r < mod; ++r)
    if (counts[static_cast<std::size_t>(r)] != 0)
      s.add(r, counts[static_cast<std::size_t>(r)]);
  return s;
}

// l_i = #{sigma : sum a_j k_{sigma(j)} == i * scale (mod step)} for
// i in {0, ..., p-1}; requires step = scale * p and step | (q-1).
// Residues off the scale grid signal misuse and raise.
inline std::vector<std::int64_t> l_counts(
    const DegreeOneChar& chi, const ClassParams& cls, std::int64_t p,
    std::int64_t scale, std::int64_t step,
    std::int64_t budget_perms = kDefaultPermBudget) {
  chi.validate();
  cls.validate();
  if (step != scale * p)
    throw std::invalid_argument("l_counts: step must equal scale * p");
  if ((chi.q - 1) % step != 0)
    throw std::invalid_argument("l_counts: step must divide q-1");
  auto counts =
      detail::residue_profile(chi.params, cls.params, step, budget_perms);
  std::vector<std::int64_t> l(static_cast<std::size_t>(p), 0);
  for (std::int64_t r = 0; r < step; ++r) {
    if (counts[static_cast<std::size_t>(r)] == 0) continue;
    if (r % scale != 0)
      throw std::logic_error("l_counts: residue off the scale grid");
    l[static_cast<std::size_t>(r / scale)] += counts[static_cast<std::size_t>(r)];
  }
  return l;
}

struct VerifyOptions {
  std::int64_t budget_perms = kDefaultPermBudget;
};

struct VerifySummary {
  std::int64_t total = 0;
  std::int64_t holds = 0;
  std::int64_t holds_trivially = 0;
  std::int64_t no_statement = 0;
  bool guarantee_p_gt_nn1 = false;  // p > n(n-1)
  bool guarantee_p_gt_n = false;   // p > n

  bool all_certified() const { return no_statement == 0; }
};

namespace detail {

inline void require_verify_args(std::int64_t n, std::int64_t q, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("verify: n must be >= 1");
  if (!is_prime_power(q))
    throw std::invalid_argument("verify: q must be a prime power");
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("verify: p must be an odd prime");
  if ((q - 1) % p != 0) throw std::invalid_argument("verify: p must divide q-1");
}

template <typename F>
void for_each_multiset(std::int64_t n, std::int64_t bound, F&& f) {
  std::vector<std::int64_t> k(static_cast<std::size_t>(n), 0);
  while (true) {
    f(k);
    std::int64_t i = n - 1;
    while (i >= 0 && k[static_cast<std::size_t>(i)] == bound - 1) --i;
    if (i < 0) return;
    std::int64_t v = ++k[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < n; ++j) k[static_cast<std::size_t>(j)] = v;
  }
}

inline bool certifies(const std::vector<std::int64_t>& l, std::int64_t p) {
  for (std::size_t i = 1; i < l.size(); ++i)
    if (l[i] != 0 && l[i] % p != 0) return true;
  return false;
}

}  // namespace detail

// Runs the GL_n(q) verifier over every degree-1-type character (multiset of
// n exponents mod q-1). Reports stream through `sink` in ascending multiset
// order; returns the verdict tallies.
inline VerifySummary verify_gl(
    std::int64_t n, std::int64_t q, std::int64_t p,
    const VerifyOptions& opts = {},
    const std::function<void(const WitnessReport&)>& sink = nullptr) {
  detail::require_verify_args(n, q, p);
  auto [qp, u] = int_p_part(q - 1, p);
  VerifySummary summary;
  summary.guarantee_p_gt_nn1 = p > n * (n - 1);
  summary.guarantee_p_gt_n = p > n;

  std::optional<ClassParams> generic_cls, congruent_cls;
  detail::for_each_multiset(n, q - 1, [&](const std::vector<std::int64_t>& k) {
    WitnessReport rep;
    rep.chi = DegreeOneChar{q, n, k};
    rep.p = p;
    std::int64_t g = q - 1;
    for (auto v : k) g = std::gcd(g, v);
    rep.k_prime = int_p_part(g, p).first;
    rep.f_prime_p = qp / rep.k_prime;
    if (rep.f_prime_p <= p) {
      rep.branch = Branch::lemma21_trivial;
      rep.verdict = Verdict::holds_trivially;
      rep.in_sl = true;  // the identity is the witness
      ++summary.holds_trivially;
    } else {
      DegreeOneChar scaled{q, n, k};
      for (auto& v : scaled.params) v /= rep.k_prime;
      bool congruent = true;
      for (std::size_t i = 1; i < scaled.params.size(); ++i)
        if ((scaled.params[i] - scaled.params[0]) % p != 0) {
          congruent = false;
          break;
        }
      if (!congruent) {
        if (!generic_cls) generic_cls = construct_class_generic(n, q, p, p);
        rep.branch = Branch::generic;
        rep.cls = *generic_cls;
      } else {
        if (!congruent_cls) congruent_cls = construct_class_congruent(n, q, p);
        rep.branch = Branch::congruent_remark45;
        rep.cls = *congruent_cls;
      }
      rep.l_counts = l_counts(scaled, *rep.cls, p, 1, p, opts.budget_perms);
      rep.in_sl = rep.cls->in_sl();
      if (detail::certifies(rep.l_counts, p)) {
        rep.verdict = Verdict::holds;
        ++summary.holds;
      } else {
        rep.verdict = Verdict::no_statement;
        ++summary.no_statement;
      }
    }
    ++summary.total;
    if (sink) sink(rep);
  });
  return summary;
}

// Runs the SL_n(q) verifier: non-congruent characters reuse the generic
// class (determinant exponent 0 mod q-1); congruent characters measure the
// congruence depth m, exit early when p^(m+1) >= (q-1)_p / k', and
// otherwise certify at scale p^m, step p^(m+1) with the step-p^(m+1) class.
// Every emitted witness class lies in SL_n(q).
inline VerifySummary verify_sl(
    std::int64_t n, std::int64_t q, std::int64_t p,
    const VerifyOptions& opts = {},
    const std::function<void(const WitnessReport&)>& sink = nullptr) {
  detail::require_verify_args(n, q, p);
  if (n < 2) throw std::invalid_argument("verify_sl: n must be >= 2");
  auto [qp, u] = int_p_part(q - 1, p);
  VerifySummary summary;
  summary.guarantee_p_gt_nn1 = p > n * (n - 1);
  summary.guarantee_p_gt_n = p > n;

  std::optional<ClassParams> generic_cls;
  std::map<std::int64_t, ClassParams> sl_cls_by_m;
  detail::for_each_multiset(n, q - 1, [&](const std::vector<std::int64_t>& k) {
    WitnessReport rep;
    rep.chi = DegreeOneChar{q, n, k};
    rep.p = p;
    ++summary.total;
    std::int64_t g = q - 1;
    for (auto v : k) g = std::gcd(g, v);
    rep.k_prime = int_p_part(g, p).first;
    rep.f_prime_p = qp / rep.k_prime;
    if (rep.f_prime_p <= p) {
      rep.branch = Branch::lemma21_trivial;
      rep.verdict = Verdict::holds_trivially;
      rep.in_sl = true;
      ++summary.holds_trivially;
      if (sink) sink(rep);
      return;
    }
    DegreeOneChar scaled{q, n, k};
    for (auto& v : scaled.params) v /= rep.k_prime;
    std::int64_t diff_gcd = 0;
    for (std::size_t i = 1; i < scaled.params.size(); ++i)
      diff_gcd = std::gcd(diff_gcd, scaled.params[i] - scaled.params[0]);
    if (diff_gcd % p != 0 && diff_gcd != 0) {
      if (!generic_cls) generic_cls = construct_class_generic(n, q, p, p);
      rep.branch = Branch::generic;
      rep.cls = *generic_cls;
      rep.l_counts = l_counts(scaled, *rep.cls, p, 1, p, opts.budget_perms);
      rep.in_sl = rep.cls->in_sl();
      if (detail::certifies(rep.l_counts, p)) {
        rep.verdict = Verdict::holds;
        ++summary.holds;
      } else {
        rep.verdict = Verdict::no_statement;
        ++summary.no_statement;
      }
      if (sink) sink(rep);
      return;
    }
    // congruent case: m = congruence depth of the rescaled parameters
    std::int64_t m = -1;  // all equal: infinitely deep
    if (diff_gcd != 0) {
      m = 0;
      std::int64_t d = diff_gcd;
      while (d % p == 0) {
        d /= p;
        ++m;
      }
    }
    rep.m = m;
    rep.branch = Branch::sl_branch;
    const std::int64_t bound = qp / rep.k_prime;  // pure p-power > p
    std::int64_t v_bound = 0;
    for (std::int64_t b = bound; b > 1; b /= p) ++v_bound;
    if (m < 0 || m + 1 >= v_bound) {
      // early exit: f_p <= p by the depth-m divisibility of all exponents
      std::int64_t eff = m < 0 ? v_bound : std::min(m, v_bound);
      std::int64_t f = 1;
      for (std::int64_t i = 0; i < v_bound - eff; ++i) f *= p;
      rep.f_prime_p = f;
      rep.verdict = Verdict::holds_trivially;
      rep.in_sl = true;
      ++summary.holds_trivially;
      if (sink) sink(rep);
      return;
    }
    std::int64_t pm = 1;
    for (std::int64_t i = 0; i < m; ++i) pm *= p;
    rep.f_prime_p = bound / pm;
    auto it = sl_cls_by_m.find(m);
    if (it == sl_cls_by_m.end())
      it = sl_cls_by_m.emplace(m, construct_class_generic(n, q, p, pm * p)).first;
    rep.cls = it->second;
    rep.l_counts = l_counts(scaled, *rep.cls, p, pm, pm * p, opts.budget_perms);
    rep.in_sl = rep.cls->in_sl();
    if (detail::certifies(rep.l_counts, p)) {
      rep.verdict = Verdict::holds;
      ++summary.holds;
    } else {
      rep.verdict = Verdict::no_statement;
      ++summary.no_statement;
    }
    if (sink) sink(rep);
  });
  return summary;
}

// The S-level witness sum at modulus f'_p: the full permutation sum of the
// original parameters at modulus q-1, rescaled down by (q-1)/f'_p. Every
// exponent is divisible by that factor for the classes built here.
inline RootSum witness_field_sum(const WitnessReport& rep,
                                 std::int64_t budget_perms = kDefaultPermBudget) {
  if (!rep.cls)
    throw std::invalid_argument("witness_field_sum: report has no class");
  RootSum full = s_value(rep.chi, *rep.cls, budget_perms);
  const std::int64_t mod = rep.chi.q - 1;
  return rescale_down(full, mod / rep.f_prime_p);
}

}  // namespace cyclosum
