#pragma once

#include <array>
#include <vector>

#include "cyclosum/numeric.hpp"

// Exhaustive residue search behind the p = 11 case of the twisted F4
// family: the 24-exponent multiset never splits into two length-11
// minimal vanishing sums plus a discarded pair of p-divisible exponents.

namespace cyclosum {

// r ranges over the odd powers of 2 mod 11 (the values 2^(2n+1) mod 11).
inline std::vector<std::int64_t> twof4_r_values() { return {8, 10, 7, 6, 2}; }

// The 12 exponent forms; the other 12 exponents are their negatives.
inline std::array<std::int64_t, 12> twof4_exponents(std::int64_t r,
                                                    std::int64_t k,
                                                    std::int64_t l) {
  return {k + l,         k - l,          2 * r * k,     2 * r * l,
          k + r * k + r * l,  -k - r * k + r * l, k - r * k + r * l,
          -k + r * k + r * l, r * k - l - r * l,  r * k + l + r * l,
          r * k + l - r * l,  r * k - l + r * l};
}

// For every (r, k, l) with (k, l) != (0, 0): remove a pair of p-divisible
// exponents from the 24 residues and test whether the remaining 22 consist
// of exactly two classes c and -c (c != 0) of multiplicity 11 each: the
// necessary shape of two minimal vanishing sums whose members are pairwise
// congruent mod p with the second the negative of the first. Returns all
// triples admitting such a configuration; the search comes back empty.
inline std::vector<std::array<std::int64_t, 3>> twof4_p11_search() {
  const std::int64_t p = 11;
  std::vector<std::array<std::int64_t, 3>> bad;
  for (std::int64_t r : twof4_r_values()) {
    for (std::int64_t k = 0; k < p; ++k) {
      for (std::int64_t l = 0; l < p; ++l) {
        auto exps = twof4_exponents(r, k, l);
        std::array<std::int64_t, 11> count{};
        for (auto e : exps) {
          std::int64_t m = ((e % p) + p) % p;
          ++count[static_cast<std::size_t>(m)];
          ++count[static_cast<std::size_t>((p - m) % p)];
        }
        if (count[0] == 24) continue;  // all residues 0: hypothesis fails
        if (count[0] < 2) continue;    // no removable p-divisible pair
        count[0] -= 2;
        for (std::int64_t c = 1; c <= (p - 1) / 2; ++c) {
          if (count[static_cast<std::size_t>(c)] == 11 &&
              count[static_cast<std::size_t>(p - c)] == 11) {
            bad.push_back({r, k, l});
            break;
          }
        }
      }
    }
  }
  return bad;
}

}  // namespace cyclosum
