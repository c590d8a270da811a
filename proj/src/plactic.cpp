#include "spbranch/plactic.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "spbranch/error.hpp"

namespace spbranch {

namespace {

int column_height(const Tableau& t, int j) {
  int h = 0;
  while (h < t.num_rows() && t.row_end(h + 1) >= j) ++h;
  return h;
}

void require_straight_sst(const Tableau& t, int m, const char* what) {
  if (!t.is_straight()) throw ValidationError(std::string(what) + " must have a straight shape");
  if (!is_semistandard(t, m)) {
    throw ValidationError(std::string(what) + " is not semistandard over [1," + std::to_string(m) + "]");
  }
}

}  // namespace

void column_insert_in_place(Tableau& t, int w, BumpingRoute* route) {
  if (route) route->rows.clear();
  for (int j = 1;; ++j) {
    const int height = column_height(t, j);
    // Column j strictly increases top to bottom: binary search for the first
    // entry >= w.
    int lo = 1;
    int hi = height + 1;
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (t.at(mid, j) >= w) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    if (route) route->rows.push_back(lo);
    if (lo == height + 1) {
      t.push_cell(lo, w);
      return;
    }
    const int bumped = t.at(lo, j);
    assert(bumped >= w);
    t.set({lo, j}, w);
    w = bumped;
  }
}

InsertResult column_insert(int w, const Tableau& t, int m) {
  if (w < 1 || w > m) throw ValidationError("inserted value " + std::to_string(w) + " outside [1," + std::to_string(m) + "]");
  require_straight_sst(t, m, "insertion target");
  InsertResult result{t, {}};
  column_insert_in_place(result.tableau, w, &result.route);
#ifndef NDEBUG
  const auto& r = result.route.rows;
  for (std::size_t i = 1; i < r.size(); ++i) assert(r[i - 1] >= r[i]);
#endif
  return result;
}

Tableau star(const Tableau& s, const Tableau& t, int m) {
  require_straight_sst(s, m, "left factor");
  require_straight_sst(t, m, "right factor");
  const auto word = column_word(s);
  Tableau out = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) column_insert_in_place(out, *it);
  assert(is_semistandard(out, m));
  return out;
}

Tableau star(const Column& b, const Tableau& t) {
  Tableau out = t;
  for (int v : b.values()) column_insert_in_place(out, v);
  return out;
}

std::pair<Column, Tableau> split_first_column(const Tableau& t, int m) {
  if (!t.is_straight()) throw ValidationError("first-column split needs a straight shape");
  if (t.empty()) throw ValidationError("cannot split the first column of an empty tableau");
  std::vector<int> first;
  std::vector<std::vector<int>> rest;
  first.reserve(static_cast<std::size_t>(t.num_rows()));
  for (const auto& row : t.rows()) {
    first.push_back(row.front());
    if (row.size() > 1) rest.emplace_back(row.begin() + 1, row.end());
  }
  return {Column(std::move(first), m), Tableau(std::move(rest))};
}

std::pair<Column, Tableau> unstar(const Tableau& u, const Partition& inner, int k, int m) {
  require_straight_sst(u, m, "product tableau");
  const Partition outer = u.outer();
  if (!is_vertical_strip(inner, outer) || outer.size() - inner.size() != k) {
    throw ValidationError(outer.to_string() + "/" + inner.to_string() + " is not a vertical strip of size " +
                          std::to_string(k));
  }
  auto added = skew_cells(outer, inner);
  // Later insertions end weakly left and strictly lower, so undo bottom-up.
  std::reverse(added.begin(), added.end());

  Tableau work = u;
  std::vector<int> recovered;
  recovered.reserve(added.size());
  for (const Cell c : added) {
    int x = work.at(c);
    work.pop_cell(c.row);
    for (int j = c.col - 1; j >= 1; --j) {
      const int height = column_height(work, j);
      int r = height;
      while (r >= 1 && work.at(r, j) > x) --r;
      if (r < 1) throw InternalError("reverse bumping found no slot in column " + std::to_string(j));
      const int displaced = work.at(r, j);
      work.set({r, j}, x);
      x = displaced;
    }
    recovered.push_back(x);
  }
  std::reverse(recovered.begin(), recovered.end());
  for (std::size_t i = 1; i < recovered.size(); ++i) {
    if (recovered[i] <= recovered[i - 1]) throw InternalError("uninserted word is not a column");
  }
  return {Column(std::move(recovered), m), std::move(work)};
}

}  // namespace spbranch
