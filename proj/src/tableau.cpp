#include "spbranch/tableau.hpp"

#include <algorithm>
#include <string>

#include "spbranch/error.hpp"

namespace spbranch {

namespace {

std::string cell_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  validate_shape();
}

Tableau::Tableau(const Partition& inner, std::vector<std::vector<int>> rows)
    : inner_(inner), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) < inner_.length()) rows_.resize(static_cast<std::size_t>(inner_.length()));
  while (static_cast<int>(rows_.size()) > inner_.length() && rows_.back().empty()) rows_.pop_back();
  validate_shape();
}

Tableau Tableau::filled(const SkewShape& shape, int value) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.outer().length(); ++i) {
    rows.emplace_back(static_cast<std::size_t>(shape.outer().part(i) - shape.inner().part(i)), value);
  }
  return Tableau(shape.inner(), std::move(rows));
}

void Tableau::validate_shape() const {
  for (int i = 1; i <= num_rows(); ++i) {
    if (i > 1 && row_end(i) > row_end(i - 1)) {
      throw ValidationError("row " + std::to_string(i) + " is longer than the row above it");
    }
    if (row_end(i) == 0) throw ValidationError("row " + std::to_string(i) + " is empty");
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1) {
        throw ValidationError("entry at " + cell_name(i, inner_.part(i) + 1 + static_cast<int>(k)) +
                              " is not a positive integer");
      }
    }
  }
}

Partition Tableau::outer() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (int i = 1; i <= num_rows(); ++i) parts.push_back(row_end(i));
  return Partition(std::move(parts));
}

int Tableau::cell_count() const noexcept {
  int count = 0;
  for (const auto& row : rows_) count += static_cast<int>(row.size());
  return count;
}

void Tableau::push_cell(int row, int value) {
  if (row == num_rows() + 1) rows_.emplace_back();
  rows_[static_cast<std::size_t>(row - 1)].push_back(value);
}

void Tableau::pop_cell(int row) {
  auto& r = rows_[static_cast<std::size_t>(row - 1)];
  r.pop_back();
  while (!rows_.empty() && rows_.back().empty() && num_rows() > inner_.length()) rows_.pop_back();
}

Column::Column(std::vector<int> values, int alphabet) : values_(std::move(values)), alphabet_(alphabet) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1 || values_[i] > alphabet_) {
      throw ValidationError("column entry " + std::to_string(values_[i]) + " outside [1," +
                            std::to_string(alphabet_) + "]");
    }
    if (i > 0 && values_[i] <= values_[i - 1]) {
      throw ValidationError("column not strictly increasing at position " + std::to_string(i + 1));
    }
  }
}

bool Column::contains(int v) const noexcept { return std::binary_search(values_.begin(), values_.end(), v); }

Tableau Column::as_tableau() const {
  std::vector<std::vector<int>> rows;
  rows.reserve(values_.size());
  for (int v : values_) rows.push_back({v});
  return Tableau(std::move(rows));
}

bool is_semistandard(const Tableau& t, int m) {
  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = t.inner().part(i) + 1; j <= t.row_end(i); ++j) {
      int v = t.at(i, j);
      if (v < 1 || v > m) return false;
      if (j < t.row_end(i) && v > t.at(i, j + 1)) return false;
      if (t.has_cell({i + 1, j}) && v >= t.at(i + 1, j)) return false;
    }
  }
  return true;
}

std::vector<int> column_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.cell_count()));
  int width = t.row_end(1);
  for (int j = 1; j <= width; ++j) {
    for (int i = t.num_rows(); i >= 1; --i) {
      if (t.has_cell({i, j})) word.push_back(t.at(i, j));
    }
  }
  return word;
}

std::vector<int> weight(const Tableau& t, int m) {
  std::vector<int> wt(static_cast<std::size_t>(m), 0);
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v < 1 || v > m) {
        throw ValidationError("entry " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
      }
      ++wt[static_cast<std::size_t>(v - 1)];
    }
  }
  return wt;
}

std::vector<int> sp_weight(const Tableau& t, int n) {
  auto wt = weight(t, 2 * n);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = wt[2 * i] - wt[2 * i + 1];
  return out;
}

bool is_symplectic(const Tableau& t, int n) {
  if (!t.is_straight()) throw ValidationError("symplectic condition needs a straight shape");
  if (!is_semistandard(t, 2 * n)) return false;
  for (int k = 1; k <= t.num_rows(); ++k) {
    if (t.at(k, 1) < 2 * k - 1) return false;
  }
  return true;
}

namespace {

// Row-major backtracking fill; values tried in increasing order so the output
// is lexicographic in the row reading word.
class SstFiller {
 public:
  SstFiller(const Partition& outer, const Partition& inner, int m)
      : outer_(outer), inner_(inner), m_(m), cells_(skew_cells(outer, inner)) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= outer.length(); ++i) {
      rows.emplace_back(static_cast<std::size_t>(outer.part(i) - inner.part(i)), 1);
    }
    work_ = Tableau(inner, std::move(rows));
    heights_ = col_heights(outer);
  }

  std::vector<Tableau> run() {
    fill(0);
    return std::move(out_);
  }

 private:
  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      out_.push_back(work_);
      return;
    }
    const Cell c = cells_[idx];
    int lo = 1;
    if (work_.has_cell({c.row, c.col - 1})) lo = std::max(lo, work_.at(c.row, c.col - 1));
    if (work_.has_cell({c.row - 1, c.col})) lo = std::max(lo, work_.at(c.row - 1, c.col) + 1);
    // Room for the strictly increasing cells below in the same column.
    const int below = heights_[static_cast<std::size_t>(c.col - 1)] - c.row;
    const int hi = m_ - below;
    for (int v = lo; v <= hi; ++v) {
      work_.set(c, v);
      fill(idx + 1);
    }
  }

  Partition outer_;
  Partition inner_;
  int m_;
  std::vector<Cell> cells_;
  std::vector<int> heights_;
  Tableau work_;
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> enumerate_skew_sst(const Partition& outer, const Partition& inner, int m) {
  if (!contains(outer, inner)) return {};
  return SstFiller(outer, inner, m).run();
}

std::vector<Tableau> enumerate_sst(const Partition& lambda, int m) {
  if (lambda.length() > m) return {};
  return enumerate_skew_sst(lambda, Partition{}, m);
}

std::vector<Tableau> enumerate_spt(const Partition& nu, int n) {
  std::vector<Tableau> out;
  if (nu.length() > n) return out;
  for (auto& t : enumerate_sst(nu, 2 * n)) {
    if (is_symplectic(t, n)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace spbranch
