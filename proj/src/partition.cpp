#include "spbranch/partition.hpp"

#include <algorithm>
#include <numeric>

#include "spbranch/error.hpp"

namespace spbranch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw ValidationError("partition part " + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition is not weakly decreasing at part " + std::to_string(i + 1));
    }
  }
}

Partition Partition::from_parts_allow_zeros(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::without_first_column() const {
  std::vector<int> out;
  out.reserve(parts_.size());
  for (int p : parts_) {
    if (p > 1) out.push_back(p - 1);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition column_shape(int l) { return Partition(std::vector<int>(static_cast<std::size_t>(l), 1)); }

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) {
    throw ValidationError("inner shape " + inner_.to_string() + " is not contained in " + outer_.to_string());
  }
}

std::vector<int> col_heights(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return cols;
}

bool has_even_columns(const Partition& lambda) {
  for (int h : col_heights(lambda)) {
    if (h % 2 != 0) return false;
  }
  return true;
}

bool is_vertical_strip(const Partition& mu, const Partition& lambda) {
  if (!contains(lambda, mu)) return false;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (mu.part(i) < lambda.part(i) - 1) return false;
  }
  return true;
}

namespace {

void enumerate_rec(int row, int max_length, int cap, const Partition& container, std::vector<int>& current,
                   std::vector<Partition>& out) {
  // Larger parts first gives lexicographically decreasing output; the
  // shorter sequence (stop here) sorts after every extension.
  if (row <= max_length) {
    int hi = std::min(cap, container.part(row));
    for (int p = hi; p >= 1; --p) {
      current.push_back(p);
      enumerate_rec(row + 1, max_length, p, container, current, out);
      current.pop_back();
    }
  }
  out.emplace_back(current);
}

void partitions_of_rec(int remaining, int cap, int max_length, std::vector<int>& current,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_length) return;
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    current.push_back(p);
    partitions_of_rec(remaining - p, p, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_length, const Partition& container) {
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_rec(1, max_length, container.part(1), container, current, out);
  return out;
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> current;
  partitions_of_rec(size, size, max_length, current, out);
  return out;
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) {
    throw ValidationError("inner shape " + inner.to_string() + " is not contained in " + outer.to_string());
  }
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(outer.size() - inner.size()));
  for (int i = 1; i <= outer.length(); ++i) {
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cells.push_back({i, j});
  }
  return cells;
}

std::vector<Cell> skew_cells(const SkewShape& shape) { return skew_cells(shape.outer(), shape.inner()); }

}  // namespace spbranch
