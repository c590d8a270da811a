#include "spbranch/branching.hpp"

#include <algorithm>
#include <string>

#include "spbranch/error.hpp"
#include "spbranch/plactic.hpp"

namespace spbranch {

namespace {

void require_sst(const Tableau& t, int n) {
  if (n < 1) throw ValidationError("n must be positive");
  if (!t.is_straight()) throw ValidationError("expected a straight-shape tableau");
  if (!is_semistandard(t, 2 * n)) {
    throw ValidationError("tableau is not semistandard over [1," + std::to_string(2 * n) + "]");
  }
}

struct SuccessorParts {
  Column column;
  Column reduced;
  Tableau remainder;
  Tableau result;
};

SuccessorParts successor_parts(const Tableau& t, int n) {
  if (t.empty()) return {Column({}, 2 * n), Column({}, 2 * n), t, t};
  auto [column, rest] = split_first_column(t, 2 * n);
  Column reduced = reduce(column, n);
  Tableau result = star(reduced, rest);
  return {std::move(column), std::move(reduced), std::move(rest), std::move(result)};
}

// Labels grid over D(lambda): 0 marks cells still in the current shape.
Tableau labels_to_q(const std::vector<std::vector<int>>& labels, const Partition& nu) {
  std::vector<std::vector<int>> rows;
  rows.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto skip = static_cast<std::ptrdiff_t>(nu.part(static_cast<int>(i) + 1));
    rows.emplace_back(labels[i].begin() + skip, labels[i].end());
  }
  return Tableau(nu, std::move(rows));
}

}  // namespace

Tableau successor(const Tableau& t, int n) {
  require_sst(t, n);
  return successor_parts(t, n).result;
}

LrResult lr_map(const Tableau& t, int n, std::vector<LrStep>* trace) {
  require_sst(t, n);
  const Partition lambda = t.outer();
  std::vector<std::vector<int>> labels;
  for (int p : lambda.parts()) labels.emplace_back(static_cast<std::size_t>(p), 0);

  LrResult result;
  result.p = t;
  result.trajectory.push_back(lambda);
  Partition current = lambda;
  for (;;) {
    SuccessorParts parts = successor_parts(result.p, n);
    Partition next = parts.result.outer();
    const bool fixed = next == current;
    if (!fixed) {
      if (!is_vertical_strip(next, current) || next.size() >= current.size()) {
        throw InternalError("successor shape " + next.to_string() + " is not a proper vertical strip of " +
                            current.to_string());
      }
      ++result.steps;
      if (result.steps > lambda.size()) throw InternalError("LR map did not terminate");
      for (const Cell c : skew_cells(current, next)) {
        labels[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = result.steps;
      }
      result.p = parts.result;
      result.trajectory.push_back(next);
      current = std::move(next);
    }
    if (trace) {
      RemovableSet removed = removable_entries(parts.column, n);
      trace->push_back({std::move(parts.column), std::move(removed), std::move(parts.reduced),
                        std::move(parts.remainder), result.p, labels_to_q(labels, current)});
    }
    if (fixed) break;
  }
  result.q = labels_to_q(labels, current);
  return result;
}

bool is_recording(const Tableau& q, const Partition& lambda, const Partition& nu, int n) {
  if (!contains(lambda, nu)) throw ValidationError(nu.to_string() + " is not contained in " + lambda.to_string());
  if (q.inner() != nu || q.outer() != lambda) {
    throw ValidationError("recording tableau shape does not match " + lambda.to_string() + "/" + nu.to_string());
  }
  if (nu.length() > n) return false;

  int max_label = 0;
  for (int i = 1; i <= q.num_rows(); ++i) {
    for (int j = nu.part(i) + 1; j <= lambda.part(i); ++j) {
      const int v = q.at(i, j);
      max_label = std::max(max_label, v);
      if (j < lambda.part(i) && !(v > q.at(i, j + 1))) return false;          // (R1)
      if (q.has_cell({i + 1, j}) && !(v >= q.at(i + 1, j))) return false;     // (R2)
    }
  }

  const int rows = lambda.length();
  // prefix[r][k]: occurrences of k in rows 1..r.
  std::vector<std::vector<int>> prefix(static_cast<std::size_t>(rows) + 1,
                                       std::vector<int>(static_cast<std::size_t>(max_label) + 2, 0));
  for (int i = 1; i <= rows; ++i) {
    prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)];
    for (int j = nu.part(i) + 1; j <= lambda.part(i); ++j) ++prefix[static_cast<std::size_t>(i)][static_cast<std::size_t>(q.at(i, j))];
  }
  const auto& total = prefix[static_cast<std::size_t>(rows)];

  for (int k = 1; k <= max_label; ++k) {
    const int count = total[static_cast<std::size_t>(k)];
    if (count % 2 != 0) return false;  // (R3)
    // (R4): nu^{k-1} = nu plus every cell labelled >= k.
    int len = nu.length();
    for (int i = rows; i > len; --i) {
      bool hit = false;
      for (int j = nu.part(i) + 1; j <= lambda.part(i) && !hit; ++j) hit = q.at(i, j) >= k;
      if (hit) {
        len = i;
        break;
      }
    }
    if (count < 2 * (len - n)) return false;
    for (int r = 1; r <= rows; ++r) {  // (R5)
      const auto& row = prefix[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(k + 1)] > row[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

namespace {

class RecordingSearch {
 public:
  RecordingSearch(const Partition& lambda, const Partition& nu, int n)
      : lambda_(lambda), nu_(nu), n_(n), cells_(skew_cells(lambda, nu)),
        max_label_(static_cast<int>(cells_.size()) / 2), work_(Tableau::filled(SkewShape(lambda, nu), 1)) {}

  std::vector<Tableau> run() {
    if (cells_.empty()) {
      out_.push_back(work_);
    } else if (max_label_ >= 1) {
      fill(0);
    }
    return std::move(out_);
  }

 private:
  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      if (is_recording(work_, lambda_, nu_, n_)) out_.push_back(work_);
      return;
    }
    const Cell c = cells_[idx];
    int hi = max_label_;
    if (work_.has_cell({c.row, c.col - 1})) hi = std::min(hi, work_.at(c.row, c.col - 1) - 1);
    if (work_.has_cell({c.row - 1, c.col})) hi = std::min(hi, work_.at(c.row - 1, c.col));
    for (int v = 1; v <= hi; ++v) {
      work_.set(c, v);
      fill(idx + 1);
    }
  }

  Partition lambda_;
  Partition nu_;
  int n_;
  std::vector<Cell> cells_;
  int max_label_;
  Tableau work_;
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> enumerate_recording(const Partition& lambda, const Partition& nu, int n) {
  if (!contains(lambda, nu) || nu.length() > n) return {};
  return RecordingSearch(lambda, nu, n).run();
}

LrInverse::LrInverse(const Partition& lambda, int n) : lambda_(lambda), n_(n) {
  for (auto& t : enumerate_sst(lambda, 2 * n)) {
    LrResult r = lr_map(t, n);
    auto [it, inserted] = table_.emplace(std::make_pair(std::move(r.p), std::move(r.q)), std::move(t));
    if (!inserted) throw InternalError("LR map is not injective on SST(" + lambda.to_string() + ")");
  }
}

const Tableau& LrInverse::lookup(const Tableau& p, const Tableau& q) const {
  auto it = table_.find({p, q});
  if (it == table_.end()) {
    throw NotInCodomain("pair is not in the image of the LR map on SST_" + std::to_string(2 * n_) + "(" +
                        lambda_.to_string() + ")");
  }
  return it->second;
}

Tableau lr_inverse_lookup(const Tableau& p, const Tableau& q, const Partition& lambda, int n) {
  return LrInverse(lambda, n).lookup(p, q);
}

}  // namespace spbranch
