#pragma once

#include <optional>
#include <utility>

#include "spbranch/tableau.hpp"

namespace spbranch {

/// A pair of columns over a shared alphabet [1, m].
struct ColumnPair {
  Column left;
  Column right;

  friend bool operator==(const ColumnPair&, const ColumnPair&) = default;
};

/// Combinatorial R-matrix R_{k,l}: (a, b) of sizes (k, l) to a pair of sizes
/// (l, k). Dispatches to the k <= l rule, otherwise the k >= l rule.
ColumnPair r_matrix(const Column& a, const Column& b);

namespace detail {
// The two defining index-selection rules; they overlap when k == l.
ColumnPair r_matrix_short_left(const Column& a, const Column& b);  // k <= l
ColumnPair r_matrix_long_left(const Column& a, const Column& b);   // k >= l
}  // namespace detail

/// (a_1..a_l) -> ((a_l), (a_1..a_{l-1})).
std::pair<Column, Column> vee_split(const Column& a);

/// [1, 2n] with the single value v removed.
Column complement_of(int v, int n);

/// (a) -> s(a)^vee, a column of size 2n-1.
Column k_map(const Column& a, int n);

/// Inverse of k_map: the partner of the one value missing from c.
Column k_inv(const Column& c, int n);

/// (a_1..a_k, a) when a > a_k (or b is empty); nullopt otherwise.
std::optional<Column> wedge_append(const Column& a, const Column& b);

/// Sends exactly (1,2) to (); identity elsewhere.
Column pi_project(const Column& a);

/// The reduction map rebuilt from R-matrices:
/// pi . wedge . (K^-1, id) . R . (red, id) . R . (K, id) . vee,
/// recursing on itself for the inner red. Throws InternalError if the wedge
/// step ever yields nothing.
Column reduce_factored(const Column& a, int n);

}  // namespace spbranch
