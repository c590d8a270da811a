#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace spbranch {

/// Weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored; part(i) for i past the length reads as 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops trailing zeros before validating.
  static Partition from_parts_allow_zeros(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part; 0 outside [1, length()].
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// Every part decreased by one (zeros dropped).
  Partition without_first_column() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// 1-based (row, col).
struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The column of height l, (1^l).
Partition column_shape(int l);

/// D(mu) within D(lambda), part by part.
bool contains(const Partition& outer, const Partition& inner);

/// outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition straight) : outer_(std::move(straight)) {}

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  bool is_straight() const noexcept { return inner_.empty(); }
  int size() const noexcept { return outer_.size() - inner_.size(); }

  bool contains_cell(Cell c) const noexcept {
    return c.row >= 1 && c.col > inner_.part(c.row) && c.col <= outer_.part(c.row);
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// (col_1(lambda), ..., col_{lambda_1}(lambda)).
std::vector<int> col_heights(const Partition& lambda);

bool has_even_columns(const Partition& lambda);

/// lambda/mu is a vertical strip: mu inside lambda with at most one cell per row.
bool is_vertical_strip(const Partition& mu, const Partition& lambda);

/// All mu with length(mu) <= max_length and mu inside container, in
/// lexicographically decreasing order of parts. Includes the empty partition.
std::vector<Partition> enumerate_partitions(int max_length, const Partition& container);

/// All partitions of exactly `size` with at most `max_length` parts,
/// lexicographically decreasing.
std::vector<Partition> partitions_of(int size, int max_length);

/// Cells of D(outer) \ D(inner) in row-major order.
/// Throws ValidationError when inner is not contained in outer.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);
std::vector<Cell> skew_cells(const SkewShape& shape);

}  // namespace spbranch
