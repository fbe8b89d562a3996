#pragma once

#include <algorithm>
#include <functional>

#include "cyclosum/partition.hpp"
#include "cyclosum/qfactored.hpp"

// Parameterization of the classes and irreducible characters of GL_n(q):
// d-simplices (orbits of multiplication by q on Z/(q^d - 1)), partition-
// valued labels with sum constraint n, and the exact character degree in
// cyclotomic-factored form.

namespace cyclosum {

inline constexpr std::int64_t kSimplexBudget = 1000000;  // q^d <= 10^6
inline constexpr std::int64_t kLabelBudgetN = 5;
inline constexpr std::int64_t kLabelBudgetQ = 16;

struct Simplex {
  std::int64_t q = 2;
  std::int64_t degree = 1;
  std::int64_t rep = 0;  // minimum of the orbit {k, kq, ..., kq^(d-1)}

  // The orbit of rep under multiplication by q mod q^d - 1 must have size
  // exactly d with rep as its minimum.
  void validate() const {
    if (q < 2 || !is_prime_power(q))
      throw std::invalid_argument("Simplex: q must be a prime power");
    if (degree < 1) throw std::invalid_argument("Simplex: degree must be >= 1");
    Int qd = int_pow(Int(q), degree);
    if (qd > kSimplexBudget) throw budget_error("Simplex: q^d exceeds budget");
    const std::int64_t mod = static_cast<std::int64_t>(qd) - 1;
    if (mod == 0) {
      if (rep != 0) throw std::invalid_argument("Simplex: rep out of range");
      return;
    }
    if (rep < 0 || rep >= mod)
      throw std::invalid_argument("Simplex: rep out of range");
    std::int64_t x = rep, size = 0;
    do {
      if (x < rep)
        throw std::invalid_argument("Simplex: rep is not the orbit minimum");
      x = static_cast<std::int64_t>((__int128)x * q % mod);
      ++size;
    } while (x != rep);
    if (size != degree)
      throw std::invalid_argument("Simplex: orbit size differs from the degree");
  }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.q == b.q && a.degree == b.degree && a.rep == b.rep;
  }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.rep < b.rep;
  }
};

// All orbits of multiplication by q on Z/(q^d - 1) of size exactly d,
// as canonical (minimal) representatives in ascending order.
inline std::vector<Simplex> simplices(std::int64_t q, std::int64_t d) {
  if (q < 2 || !is_prime_power(q))
    throw std::invalid_argument("simplices: q must be a prime power");
  if (d < 1) throw std::invalid_argument("simplices: d must be >= 1");
  Int qd = int_pow(Int(q), d);
  if (qd > kSimplexBudget)
    throw budget_error("simplices: q^d exceeds budget");
  const std::int64_t mod = static_cast<std::int64_t>(qd) - 1;
  if (mod == 0) return {Simplex{q, 1, 0}};  // Z/1: the single orbit {0}
  std::vector<bool> seen(static_cast<std::size_t>(mod), false);
  std::vector<Simplex> out;
  for (std::int64_t k = 0; k < mod; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    std::int64_t size = 0, x = k, rep = k;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      rep = std::min(rep, x);
      x = static_cast<std::int64_t>((__int128)x * q % mod);
      ++size;
    } while (x != k);
    if (size == d) out.push_back(Simplex{q, d, rep});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Partition-valued label: simplices (or irreducible polynomials != x,
// identified with simplices via root exponents) mapped to partitions with
// sum |rho| * deg = n. Only the non-empty assignments are stored.
struct LabelMap {
  std::int64_t n = 0;
  std::int64_t q = 2;
  std::map<Simplex, Partition> assignment;

  void validate() const {
    std::int64_t total = 0;
    for (auto& [g, rho] : assignment) {
      if (rho.empty())
        throw std::invalid_argument("LabelMap: stored partitions must be non-empty");
      if (g.q != q) throw std::invalid_argument("LabelMap: simplex q mismatch");
      g.validate();
      rho.validate();
      total += rho.size() * g.degree;
    }
    if (total != n)
      throw std::invalid_argument("LabelMap: sum |rho|*deg != n");
  }

  friend bool operator==(const LabelMap& a, const LabelMap& b) {
    return a.n == b.n && a.q == b.q && a.assignment == b.assignment;
  }
  friend bool operator<(const LabelMap& a, const LabelMap& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.q != b.q) return a.q < b.q;
    return a.assignment < b.assignment;
  }
};

struct CharLabel : LabelMap {};
struct ClassLabel : LabelMap {};

// All labels for GL_n(q), in deterministic order: simplices sorted by
// (degree, rep), partitions reverse-lexicographic per simplex.
inline std::vector<LabelMap> enumerate_label_maps(std::int64_t n, std::int64_t q) {
  if (n < 0 || n > kLabelBudgetN || q > kLabelBudgetQ)
    throw budget_error("enumerate_labels: (n, q) outside desk-scale budget");
  std::vector<Simplex> all;
  for (std::int64_t d = 1; d <= n; ++d) {
    auto sd = simplices(q, d);
    all.insert(all.end(), sd.begin(), sd.end());
  }
  std::sort(all.begin(), all.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.rep < b.rep;
            });
  std::vector<LabelMap> out;
  LabelMap cur;
  cur.n = n;
  cur.q = q;
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (idx == all.size()) return;
    const Simplex& g = all[idx];
    // Remaining simplices all have degree >= g.degree; prune when even
    // degree-1 fills are impossible.
    self(self, idx + 1, rem);  // skip: empty partition
    for (std::int64_t w = g.degree; w <= rem; w += g.degree) {
      for (const Partition& rho : partitions(w / g.degree)) {
        cur.assignment[g] = rho;
        self(self, idx + 1, rem - w);
      }
      cur.assignment.erase(g);
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::pair<std::vector<ClassLabel>, std::vector<CharLabel>>
enumerate_labels(std::int64_t n, std::int64_t q) {
  auto maps = enumerate_label_maps(n, q);
  std::vector<ClassLabel> classes(maps.size());
  std::vector<CharLabel> chars(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    static_cast<LabelMap&>(classes[i]) = maps[i];
    static_cast<LabelMap&>(chars[i]) = maps[i];
  }
  return {std::move(classes), std::move(chars)};
}

// {rho : q^e}: the block of Green's degree formula attached to one simplex.
// q-power e*(a_2 + 2 a_3 + ...), numerator prod_{r<s} (1 - q^(e(a_r-a_s-r+s))),
// denominator prod_r (-1)^(a_r+l-r) Psi_{a_r+l-r}(q^e). Numerator exponents
// are >= 1 for weakly decreasing parts, so no factor can vanish.
inline CycFactored brace(const Partition& rho, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("brace: e must be >= 1");
  const auto& a = rho.parts;
  const std::int64_t l = static_cast<std::int64_t>(a.size());
  CycFactored r;
  for (std::int64_t i = 2; i <= l; ++i)
    r.qpow += e * (i - 1) * a[static_cast<std::size_t>(i - 1)];
  for (std::int64_t s = 2; s <= l; ++s)
    for (std::int64_t rr = 1; rr < s; ++rr)
      r = factored_mul(r, one_minus_qj(e * (a[static_cast<std::size_t>(rr - 1)] -
                                             a[static_cast<std::size_t>(s - 1)] -
                                             rr + s)));
  for (std::int64_t rr = 1; rr <= l; ++rr) {
    std::int64_t idx = a[static_cast<std::size_t>(rr - 1)] + l - rr;
    if ((idx & 1) != 0) r.rational = -r.rational;  // (-1)^(a_r + l - r)
    r = factored_div(r, psi_scaled(idx, e));
  }
  return r;
}

// Character shape: the multiset of (simplex degree, partition) pairs of the
// non-empty assignments. The degree and every divisibility statement about
// it depend on the label only through its shape.
using CharShape = std::vector<std::pair<std::int64_t, Partition>>;

inline CharShape shape_of(const LabelMap& label) {
  CharShape shape;
  for (auto& [g, rho] : label.assignment) shape.emplace_back(g.degree, rho);
  std::sort(shape.begin(), shape.end());
  return shape;
}

inline std::int64_t shape_size(const CharShape& shape) {
  std::int64_t n = 0;
  for (auto& [d, rho] : shape) n += d * rho.size();
  return n;
}

// Degree of the character with the given shape:
// Psi_n(q) * prod (-1)^|rho| {rho : q^deg}. Always an integer polynomial
// in q; a negative exponent after cancellation indicates a bug.
inline CycFactored degree_from_shape(const CharShape& shape) {
  const std::int64_t n = shape_size(shape);
  CycFactored r = psi(n);
  for (auto& [d, rho] : shape) {
    if ((rho.size() & 1) != 0) r.rational = -r.rational;
    r = factored_mul(r, brace(rho, d));
  }
  if (!r.is_polynomial())
    throw std::logic_error("degree: cancellation left a non-polynomial result");
  return r;
}

inline CycFactored degree(const CharLabel& chi) {
  chi.validate();
  return degree_from_shape(shape_of(chi));
}

// All character shapes of size n: multisets of (d, partition) pairs with
// sum |rho|*d = n, enumerated without reference to any particular q.
inline std::vector<CharShape> enumerate_shapes(std::int64_t n) {
  // Ordered atom list: every (d, rho) with |rho|*d <= n.
  std::vector<std::pair<std::int64_t, Partition>> atoms;
  for (std::int64_t d = 1; d <= n; ++d)
    for (std::int64_t w = 1; w * d <= n; ++w)
      for (const Partition& rho : partitions(w)) atoms.emplace_back(d, rho);
  std::sort(atoms.begin(), atoms.end());
  std::vector<CharShape> out;
  CharShape cur;
  auto rec = [&](auto&& self, std::size_t from, std::int64_t rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      std::int64_t w = atoms[i].first * atoms[i].second.size();
      if (w > rem) continue;
      cur.push_back(atoms[i]);
      self(self, i, rem - w);  // repeats allowed: distinct simplices, same pair
      cur.pop_back();
    }
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

// i rounded down to the next integer divisible by j (toward -infinity).
inline std::int64_t floor_mult(std::int64_t i, std::int64_t j) {
  if (j < 1) throw std::invalid_argument("floor_mult: j must be >= 1");
  std::int64_t k = i / j;
  if (i % j != 0 && i < 0) --k;
  return k * j;
}

// sum over simplices of |rho|*deg - floor_mult(|rho|*gcd(deg, m), m):
// m * a <= this sum guarantees Phi_m(q)^a divides the degree.
inline std::int64_t lemma_divisibility_lhs(const CharShape& shape,
                                           std::int64_t m) {
  if (m < 1) throw std::invalid_argument("lemma_divisibility_lhs: m >= 1");
  std::int64_t total = 0;
  for (auto& [d, rho] : shape) {
    std::int64_t w = rho.size();
    total += w * d - floor_mult(w * std::gcd(d, m), m);
  }
  return total;
}

inline std::int64_t lemma_divisibility_lhs(const CharLabel& chi,
                                           std::int64_t m) {
  return lemma_divisibility_lhs(shape_of(chi), m);
}

// |GL_n(q)| = q^(n(n-1)/2) * prod_{i<=n} (q^i - 1).
inline Int group_order(std::int64_t n, std::int64_t q) {
  if (n < 1) throw std::invalid_argument("group_order: n must be >= 1");
  Int r = int_pow(Int(q), n * (n - 1) / 2);
  for (std::int64_t i = 1; i <= n; ++i) r *= int_pow(Int(q), i) - 1;
  return r;
}

// Textual form `n,q|d:k->(p1,...);...` with entries sorted by (degree, rep).
inline std::string to_string(const LabelMap& label) {
  std::string out = std::to_string(label.n) + "," + std::to_string(label.q) + "|";
  std::vector<std::pair<Simplex, Partition>> entries(label.assignment.begin(),
                                                     label.assignment.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree != b.first.degree)
                return a.first.degree < b.first.degree;
              return a.first.rep < b.first.rep;
            });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(entries[i].first.degree) + ":" +
           std::to_string(entries[i].first.rep) + "->" +
           to_string(entries[i].second);
  }
  return out;
}

inline LabelMap parse_label(const std::string& text) {
  std::size_t pos = 0;
  LabelMap label;
  label.n = detail::parse_int64(text, pos);
  if (pos >= text.size() || text[pos] != ',')
    throw parse_error("expected ',' after n", pos);
  ++pos;
  label.q = detail::parse_int64(text, pos);
  if (pos >= text.size() || text[pos] != '|')
    throw parse_error("expected '|' after q", pos);
  ++pos;
  while (pos < text.size()) {
    std::int64_t d = detail::parse_int64(text, pos);
    if (pos >= text.size() || text[pos] != ':')
      throw parse_error("expected ':' after degree", pos);
    ++pos;
    std::int64_t k = detail::parse_int64(text, pos);
    if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>')
      throw parse_error("expected '->'", pos);
    pos += 2;
    Partition rho = parse_partition(text, pos);
    Simplex g{label.q, d, k};
    if (label.assignment.count(g))
      throw parse_error("duplicate simplex in label", pos);
    label.assignment[g] = rho;
    if (pos < text.size()) {
      if (text[pos] != ';') throw parse_error("expected ';'", pos);
      ++pos;
    }
  }
  label.validate();
  return label;
}

}  // namespace cyclosum
