#pragma once

#include <cstdint>
#include <map>
#include <vector>

// Test-only oracle: conjugacy-class count of GL_n(q) for tiny n and prime q,
// by enumerating every invertible matrix and partitioning into orbits under
// conjugation. Independent of the label combinatorics it checks.

namespace glconj {

using Mat = std::vector<std::int64_t>;  // row-major n*n entries mod q

inline Mat mat_mul(const Mat& a, const Mat& b, std::int64_t n, std::int64_t q) {
  Mat c(static_cast<std::size_t>(n * n), 0);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t k = 0; k < n; ++k) {
      std::int64_t aik = a[static_cast<std::size_t>(i * n + k)];
      if (aik == 0) continue;
      for (std::int64_t j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i * n + j)] =
            (c[static_cast<std::size_t>(i * n + j)] +
             aik * b[static_cast<std::size_t>(k * n + j)]) %
            q;
    }
  return c;
}

inline bool is_identity(const Mat& a, std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (a[static_cast<std::size_t>(i * n + j)] != (i == j ? 1 : 0)) return false;
  return true;
}

inline std::int64_t det_mod(Mat a, std::int64_t n, std::int64_t q) {
  std::int64_t det = 1;
  for (std::int64_t col = 0; col < n; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t row = col; row < n; ++row)
      if (a[static_cast<std::size_t>(row * n + col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (std::int64_t j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot * n + j)],
                  a[static_cast<std::size_t>(col * n + j)]);
      det = (q - det) % q;
    }
    std::int64_t pv = a[static_cast<std::size_t>(col * n + col)];
    det = det * pv % q;
    // inverse of pv mod prime q
    std::int64_t inv = 1;
    for (std::int64_t e = 0; e < q - 2; ++e) inv = inv * pv % q;
    for (std::int64_t row = col + 1; row < n; ++row) {
      std::int64_t f = a[static_cast<std::size_t>(row * n + col)] * inv % q;
      if (f == 0) continue;
      for (std::int64_t j = col; j < n; ++j)
        a[static_cast<std::size_t>(row * n + j)] =
            (a[static_cast<std::size_t>(row * n + j)] +
             (q - f) * a[static_cast<std::size_t>(col * n + j)]) %
            q;
    }
  }
  return det;
}

inline std::int64_t conjugacy_class_count(std::int64_t n, std::int64_t q) {
  std::vector<Mat> group;
  const std::int64_t cells = n * n;
  Mat m(static_cast<std::size_t>(cells), 0);
  while (true) {
    if (det_mod(m, n, q) != 0) group.push_back(m);
    std::int64_t i = cells - 1;
    while (i >= 0 && m[static_cast<std::size_t>(i)] == q - 1) {
      m[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++m[static_cast<std::size_t>(i)];
  }
  std::map<Mat, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  std::vector<std::size_t> inverse(group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j)
      if (is_identity(mat_mul(group[i], group[j], n, q), n)) {
        inverse[i] = j;
        break;
      }
  std::vector<bool> visited(group.size(), false);
  std::int64_t classes = 0;
  for (std::size_t g = 0; g < group.size(); ++g) {
    if (visited[g]) continue;
    ++classes;
    for (std::size_t h = 0; h < group.size(); ++h) {
      Mat conj = mat_mul(mat_mul(group[h], group[g], n, q),
                         group[inverse[h]], n, q);
      visited[index.at(conj)] = true;
    }
  }
  return classes;
}

}  // namespace glconj
