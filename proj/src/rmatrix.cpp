#include "spbranch/rmatrix.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "spbranch/error.hpp"
#include "spbranch/reduction.hpp"

namespace spbranch {

namespace {

Column sorted_column(std::vector<int> values, int m) {
  std::sort(values.begin(), values.end());
  return Column(std::move(values), m);
}

void require_same_alphabet(const Column& a, const Column& b) {
  if (a.alphabet() != b.alphabet()) {
    throw ValidationError("R-matrix columns use different alphabets (" + std::to_string(a.alphabet()) + " vs " +
                          std::to_string(b.alphabet()) + ")");
  }
}

}  // namespace

namespace detail {

ColumnPair r_matrix_short_left(const Column& a, const Column& b) {
  const int k = a.size();
  const int l = b.size();
  const int m = a.alphabet();
  std::vector<bool> used(static_cast<std::size_t>(l), false);
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    int choice = -1;
    int fallback = -1;
    for (int i = 0; i < l; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (fallback < 0) fallback = i;
      if (b[static_cast<std::size_t>(i)] >= a[static_cast<std::size_t>(r)]) {
        choice = i;
        break;
      }
    }
    if (choice < 0) choice = fallback;
    used[static_cast<std::size_t>(choice)] = true;
    picked.push_back(b[static_cast<std::size_t>(choice)]);
  }
  std::vector<int> left = a.values();
  for (int i = 0; i < l; ++i) {
    if (!used[static_cast<std::size_t>(i)]) left.push_back(b[static_cast<std::size_t>(i)]);
  }
  return {sorted_column(std::move(left), m), sorted_column(std::move(picked), m)};
}

ColumnPair r_matrix_long_left(const Column& a, const Column& b) {
  const int k = a.size();
  const int l = b.size();
  const int m = a.alphabet();
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(l));
  for (int r = 0; r < l; ++r) {
    int choice = -1;
    int fallback = -1;
    for (int i = k - 1; i >= 0; --i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (fallback < 0) fallback = i;
      if (a[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(r)]) {
        choice = i;
        break;
      }
    }
    if (choice < 0) choice = fallback;
    used[static_cast<std::size_t>(choice)] = true;
    picked.push_back(a[static_cast<std::size_t>(choice)]);
  }
  std::vector<int> right = b.values();
  for (int i = 0; i < k; ++i) {
    if (!used[static_cast<std::size_t>(i)]) right.push_back(a[static_cast<std::size_t>(i)]);
  }
  return {sorted_column(std::move(picked), m), sorted_column(std::move(right), m)};
}

}  // namespace detail

ColumnPair r_matrix(const Column& a, const Column& b) {
  require_same_alphabet(a, b);
  return a.size() <= b.size() ? detail::r_matrix_short_left(a, b) : detail::r_matrix_long_left(a, b);
}

std::pair<Column, Column> vee_split(const Column& a) {
  if (a.empty()) throw ValidationError("cannot split the last entry off an empty column");
  std::vector<int> head(a.values().begin(), a.values().end() - 1);
  return {Column({a.values().back()}, a.alphabet()), Column(std::move(head), a.alphabet())};
}

Column complement_of(int v, int n) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(2 * n - 1));
  for (int x = 1; x <= 2 * n; ++x) {
    if (x != v) values.push_back(x);
  }
  return Column(std::move(values), 2 * n);
}

Column k_map(const Column& a, int n) {
  if (a.size() != 1 || a[0] > 2 * n) throw ValidationError("K expects a single entry in [1,2n]");
  return complement_of(partner(a[0]), n);
}

Column k_inv(const Column& c, int n) {
  if (c.size() != 2 * n - 1 || (!c.empty() && c.values().back() > 2 * n)) {
    throw ValidationError("K^-1 expects a column of size 2n-1 over [1,2n]");
  }
  int missing = 2 * n;
  for (int x = 1; x <= 2 * n - 1; ++x) {
    if (c[static_cast<std::size_t>(x - 1)] != x) {
      missing = x;
      break;
    }
  }
  return Column({partner(missing)}, 2 * n);
}

std::optional<Column> wedge_append(const Column& a, const Column& b) {
  if (a.size() != 1) throw ValidationError("wedge expects a single-entry column on the left");
  if (!b.empty() && a[0] <= b.values().back()) return std::nullopt;
  std::vector<int> values = b.values();
  values.push_back(a[0]);
  return Column(std::move(values), std::max(a.alphabet(), b.alphabet()));
}

Column pi_project(const Column& a) {
  if (a.values() == std::vector<int>{1, 2}) return Column({}, a.alphabet());
  return a;
}

Column reduce_factored(const Column& a, int n) {
  if (!a.empty() && a.values().back() > 2 * n) {
    throw ValidationError("column entry " + std::to_string(a.values().back()) + " exceeds 2n = " +
                          std::to_string(2 * n));
  }
  const Column col(a.values(), 2 * n);
  if (col.size() <= 1) return col;

  auto [last, head] = vee_split(col);
  const ColumnPair first = r_matrix(k_map(last, n), head);
  const Column reduced = reduce_factored(first.left, n);
  const ColumnPair second = r_matrix(reduced, first.right);
  const Column top = k_inv(second.left, n);
  auto joined = wedge_append(top, second.right);
  if (!joined) {
    throw InternalError("factored reduction: wedge step produced 0 for column of size " + std::to_string(col.size()));
  }
  return pi_project(*joined);
}

}  // namespace spbranch
