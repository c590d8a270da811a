#pragma once

#include <utility>
#include <vector>

#include "spbranch/tableau.hpp"

namespace spbranch {

/// Rows (r_1, ..., r_s) visited by one column insertion; r_s is the row of
/// the new cell, which lands in column s.
struct BumpingRoute {
  std::vector<int> rows;

  int end_column() const noexcept { return static_cast<int>(rows.size()); }
  int end_row() const noexcept { return rows.back(); }
  friend bool operator==(const BumpingRoute&, const BumpingRoute&) = default;
};

struct InsertResult {
  Tableau tableau;
  BumpingRoute route;
};

/// w -> T. T must be a straight semistandard tableau over [1, m].
InsertResult column_insert(int w, const Tableau& t, int m);

/// In-place column insertion without validation. Returns the route when
/// `route` is non-null.
void column_insert_in_place(Tableau& t, int w, BumpingRoute* route = nullptr);

/// The plactic product S * T: the column word (w_1..w_r) of S inserted into T
/// starting from w_r.
Tableau star(const Tableau& s, const Tableau& t, int m);

/// b * T for a single column b (inserts b_1 first, b_k last).
Tableau star(const Column& b, const Tableau& t);

/// Splits a nonempty straight tableau into its first column and the rest.
std::pair<Column, Tableau> split_first_column(const Tableau& t, int m);

/// Inverse of (b, T') -> b * T' for b of size k and sh(T') = inner.
/// Added cells of sh(U)/inner are uninserted bottom-most first.
std::pair<Column, Tableau> unstar(const Tableau& u, const Partition& inner, int k, int m);

}  // namespace spbranch
