#pragma once
// Independent reference computations used only by the tests. None of these
// call into the library's algorithms beyond its value types.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "spbranch/partition.hpp"
#include "spbranch/tableau.hpp"

namespace oracle {

/// Number of weakly decreasing sequences (c_1..c_k) with c_i <= container_i,
/// counted by brute force over every tuple in the bounding box.
inline int count_subpartitions(int max_length, const spbranch::Partition& container) {
  const int k = max_length;
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  int count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i + 1 < k; ++i) ok = ok && c[i] >= c[i + 1];
    if (ok) ++count;
    int i = 0;
    while (i < k && c[i] == container.part(i + 1)) c[i++] = 0;
    if (i == k) break;
    ++c[i];
  }
  return count;
}

/// |SST_m(lambda)| by the hook-content formula, computed as an exact ratio.
inline std::int64_t hook_content(const spbranch::Partition& lambda, int m) {
  std::vector<std::int64_t> num;
  std::vector<std::int64_t> den;
  const auto heights = spbranch::col_heights(lambda);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num.push_back(m + j - i);
      den.push_back(lambda.part(i) - j + heights[static_cast<std::size_t>(j - 1)] - i + 1);
    }
  }
  // Products stay small for the sizes used in tests.
  std::int64_t n = 1;
  std::int64_t d = 1;
  for (auto v : num) n *= v;
  for (auto v : den) d *= v;
  return n / d;
}

/// dim V^Sp(nu) by Weyl's formula for type C_n.
inline std::int64_t sp_dimension(const spbranch::Partition& nu, int n) {
  if (nu.length() > n) return 0;
  std::vector<std::int64_t> l(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) l[static_cast<std::size_t>(i - 1)] = nu.part(i) + n + 1 - i;
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (int i = 1; i <= n; ++i) {
    num *= l[static_cast<std::size_t>(i - 1)];
    den *= n + 1 - i;
    for (int j = i + 1; j <= n; ++j) {
      num *= (l[static_cast<std::size_t>(i - 1)] - l[static_cast<std::size_t>(j - 1)]) *
             (l[static_cast<std::size_t>(i - 1)] + l[static_cast<std::size_t>(j - 1)]);
      den *= static_cast<std::int64_t>(j - i) * (2 * n + 2 - i - j);
    }
  }
  return num / den;
}

/// Schensted row insertion of a whole word, left to right.
inline std::vector<std::vector<int>> row_insert_word(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return rows;
}

/// Rem by the defining recursion on prefixes, written literally.
inline std::set<int> literal_rem(const std::vector<int>& a) {
  const int l = static_cast<int>(a.size());
  if (l <= 1) return {};
  const std::vector<int> short2(a.begin(), a.end() - 2);
  const std::set<int> r2 = literal_rem(short2);
  const int al = a[static_cast<std::size_t>(l - 1)];
  const int al1 = a[static_cast<std::size_t>(l - 2)];
  if (al % 2 == 0 && al1 == al - 1 && al < 2 * l - static_cast<int>(r2.size()) - 1) {
    std::set<int> out = r2;
    out.insert(al1);
    out.insert(al);
    return out;
  }
  return literal_rem(std::vector<int>(a.begin(), a.end() - 1));
}

/// Every strictly increasing subset of [1, m].
inline std::vector<std::vector<int>> subsets(int m) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> v;
    for (int x = 1; x <= m; ++x) {
      if (mask & (1u << (x - 1))) v.push_back(x);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace oracle
