#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "spbranch/partition.hpp"

namespace spbranch {

/// A filling of a skew diagram by positive integers. Entries are stored row by
/// row, skipping the inner cells: rows()[i-1][k] is the entry at
/// (i, inner.part(i) + 1 + k).
class Tableau {
 public:
  Tableau() = default;
  /// Straight shape; row lengths must form a partition.
  explicit Tableau(std::vector<std::vector<int>> rows);
  Tableau(std::initializer_list<std::vector<int>> rows) : Tableau(std::vector<std::vector<int>>(rows)) {}
  /// Skew shape outer/inner; row k lists the entries of row k outside inner.
  Tableau(const Partition& inner, std::vector<std::vector<int>> rows);
  /// Every cell of `shape` filled with `value`.
  static Tableau filled(const SkewShape& shape, int value);

  const Partition& inner() const noexcept { return inner_; }
  Partition outer() const;
  SkewShape shape() const { return SkewShape(outer(), inner_); }
  bool is_straight() const noexcept { return inner_.empty(); }
  bool empty() const noexcept { return cell_count() == 0; }
  int cell_count() const noexcept;
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// Rightmost column index of row i (inner part plus stored entries); 0 past the end.
  int row_end(int i) const noexcept {
    return (i >= 1 && i <= num_rows())
               ? inner_.part(i) + static_cast<int>(rows_[static_cast<std::size_t>(i - 1)].size())
               : 0;
  }
  bool has_cell(Cell c) const noexcept { return c.row >= 1 && c.col > inner_.part(c.row) && c.col <= row_end(c.row); }
  /// Entry at an existing cell (unchecked).
  int at(int row, int col) const noexcept {
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - inner_.part(row) - 1)];
  }
  int at(Cell c) const noexcept { return at(c.row, c.col); }

  // Mutators used by the insertion algorithms. They keep the stored rows in
  // sync but do not re-validate the shape.
  void set(Cell c, int value) noexcept {
    rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - inner_.part(c.row) - 1)] = value;
  }
  /// Appends a cell at the end of row `row` (which may be one past the last row).
  void push_cell(int row, int value);
  /// Removes the last cell of row `row`, dropping the row when it becomes empty
  /// and it is the last one.
  void pop_cell(int row);

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  void validate_shape() const;

  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

/// Strictly increasing sequence of integers in [1, alphabet]; an element of
/// SST_m(varpi_l).
class Column {
 public:
  Column() = default;
  Column(std::vector<int> values, int alphabet);

  const std::vector<int>& values() const noexcept { return values_; }
  int alphabet() const noexcept { return alphabet_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  bool contains(int v) const noexcept;

  /// The column as a one-column straight tableau.
  Tableau as_tableau() const;

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;

 private:
  std::vector<int> values_;
  int alphabet_ = 0;
};

/// Rows weakly increase, columns strictly increase, all entries in [1, m].
/// Only pairs of cells that both lie in the skew diagram are compared.
bool is_semistandard(const Tableau& t, int m);

/// Columns read bottom to top, left to right.
std::vector<int> column_word(const Tableau& t);

/// (T[1], ..., T[m]); throws ValidationError for entries outside [1, m].
std::vector<int> weight(const Tableau& t, int m);

/// (T[1]-T[2], T[3]-T[4], ..., T[2n-1]-T[2n]).
std::vector<int> sp_weight(const Tableau& t, int n);

/// King's condition T(k,1) >= 2k-1 on a semistandard straight tableau over
/// [1,2n]. Throws ValidationError for skew input.
bool is_symplectic(const Tableau& t, int n);

/// SST_m(lambda), ordered lexicographically by the row reading word.
/// Empty when length(lambda) > m.
std::vector<Tableau> enumerate_sst(const Partition& lambda, int m);

/// SST_m(outer/inner), same ordering.
std::vector<Tableau> enumerate_skew_sst(const Partition& outer, const Partition& inner, int m);

/// SpT_{2n}(nu): the symplectic members of SST_{2n}(nu).
std::vector<Tableau> enumerate_spt(const Partition& nu, int n);

}  // namespace spbranch
