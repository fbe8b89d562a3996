#pragma once

#include <string>
#include <vector>

#include "cyclosum/numeric.hpp"

namespace cyclosum {

// Weakly decreasing sequence of positive parts; the empty partition is the
// unique partition of 0.
struct Partition {
  std::vector<std::int64_t> parts;

  Partition() = default;
  Partition(std::initializer_list<std::int64_t> p) : parts(p) { validate(); }
  explicit Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
    validate();
  }

  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Partition: parts must be non-increasing");
    }
  }

  std::int64_t size() const {
    std::int64_t n = 0;
    for (auto p : parts) n += p;
    return n;
  }
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts < b.parts;
  }
};

inline constexpr std::int64_t kPartitionBudget = 40;

// All partitions of n in reverse-lexicographic order:
// (n), (n-1,1), ..., (1,...,1).
inline std::vector<Partition> partitions(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
  if (n > kPartitionBudget)
    throw budget_error("partitions: n exceeds budget " +
                       std::to_string(kPartitionBudget));
  std::vector<Partition> out;
  std::vector<std::int64_t> stack;
  auto rec = [&](auto&& self, std::int64_t rem, std::int64_t max_part) -> void {
    if (rem == 0) {
      out.emplace_back(Partition{std::vector<std::int64_t>(stack)});
      return;
    }
    for (std::int64_t p = std::min(rem, max_part); p >= 1; --p) {
      stack.push_back(p);
      self(self, rem - p, p);
      stack.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

inline std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out + ")";
}

inline Partition parse_partition(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(')
    throw parse_error("expected '('", pos);
  ++pos;
  std::vector<std::int64_t> parts;
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
    return Partition{};
  }
  while (true) {
    std::size_t at = pos;
    std::int64_t v = detail::parse_int64(text, pos);
    if (v < 1) throw parse_error("partition parts must be positive", at);
    if (!parts.empty() && v > parts.back())
      throw parse_error("partition parts must be non-increasing", at);
    parts.push_back(v);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      return Partition{std::move(parts)};
    }
    throw parse_error("expected ',' or ')'", pos);
  }
}

inline Partition parse_partition(const std::string& text) {
  std::size_t pos = 0;
  Partition p = parse_partition(text, pos);
  if (pos != text.size()) throw parse_error("trailing characters", pos);
  return p;
}

}  // namespace cyclosum
