#include "spbranch/verification.hpp"

#include <algorithm>

#include "spbranch/branching.hpp"

namespace spbranch {

bool is_symplectic_lr(const Tableau& t, int n) {
  const int m = 2 * n;
  if (!is_semistandard(t, m)) return false;

  const auto word = column_word(t);
  std::vector<int> seen(static_cast<std::size_t>(m) + 2, 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int v = *it;
    ++seen[static_cast<std::size_t>(v)];
    if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return false;
  }

  // A lattice word already has a weakly decreasing weight.
  const auto wt = weight(t, m);
  if (!has_even_columns(Partition::from_parts_allow_zeros(wt))) return false;

  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = t.inner().part(i) + 1; j <= t.row_end(i); ++j) {
      const int v = t.at(i, j);
      if (v % 2 != 0 && i > n + (v - 1) / 2) return false;
    }
  }
  return true;
}

namespace {

class LrspSearch {
 public:
  LrspSearch(const Partition& lambda, const Partition& nu, int n)
      : n_(n), m_(2 * n), heights_(col_heights(lambda)), work_(Tableau::filled(SkewShape(lambda, nu), 1)),
        seen_(static_cast<std::size_t>(2 * n) + 2, 0) {
    cells_ = skew_cells(lambda, nu);
    std::sort(cells_.begin(), cells_.end(), [](Cell a, Cell b) {
      return a.col != b.col ? a.col > b.col : a.row < b.row;
    });
  }

  std::vector<Tableau> run() {
    fill(0);
    return std::move(out_);
  }

 private:
  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      std::vector<int> wt(seen_.begin() + 1, seen_.begin() + 1 + m_);
      if (has_even_columns(Partition::from_parts_allow_zeros(std::move(wt)))) out_.push_back(work_);
      return;
    }
    const Cell c = cells_[idx];
    int lo = 1;
    int hi = m_ - (heights_[static_cast<std::size_t>(c.col - 1)] - c.row);
    if (work_.has_cell({c.row - 1, c.col})) lo = std::max(lo, work_.at(c.row - 1, c.col) + 1);
    if (work_.has_cell({c.row, c.col + 1})) hi = std::min(hi, work_.at(c.row, c.col + 1));
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && seen_[static_cast<std::size_t>(v)] + 1 > seen_[static_cast<std::size_t>(v - 1)]) continue;
      if (v % 2 != 0 && c.row > n_ + (v - 1) / 2) continue;
      work_.set(c, v);
      ++seen_[static_cast<std::size_t>(v)];
      fill(idx + 1);
      --seen_[static_cast<std::size_t>(v)];
    }
  }

  int n_;
  int m_;
  std::vector<int> heights_;
  std::vector<Cell> cells_;
  Tableau work_;
  std::vector<int> seen_;
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> enumerate_lrsp(const Partition& lambda, const Partition& nu, int n) {
  if (!contains(lambda, nu)) return {};
  return LrspSearch(lambda, nu, n).run();
}

Tableau rec_to_lrsp(const Tableau& r) {
  std::vector<std::vector<int>> rows;
  std::map<int, int> counts;
  for (const auto& row : r.rows()) {
    for (int v : row) ++counts[v];
    std::vector<int> out;
    out.reserve(row.size());
    for (int v : row) out.push_back(counts[v]);
    rows.push_back(std::move(out));
  }
  return Tableau(r.inner(), std::move(rows));
}

LaurentPoly schur(const Partition& lambda, int m) {
  LaurentPoly p(m);
  for (const auto& t : enumerate_sst(lambda, m)) p.add_term(weight(t, m), 1);
  return p;
}

LaurentPoly sp_schur(const Partition& nu, int n) {
  LaurentPoly p(n);
  for (const auto& t : enumerate_spt(nu, n)) p.add_term(sp_weight(t, n), 1);
  return p;
}

LaurentPoly restrict_character(const LaurentPoly& p, int n) {
  if (p.num_vars() != 2 * n) throw ValidationError("restriction expects a polynomial in 2n variables");
  LaurentPoly out(n);
  LaurentPoly::Exponent z(static_cast<std::size_t>(n));
  for (const auto& [w, c] : p.terms()) {
    for (int i = 0; i < n; ++i) {
      const int diff = w[static_cast<std::size_t>(2 * i)] - w[static_cast<std::size_t>(2 * i + 1)];
      z[static_cast<std::size_t>(i)] = (i % 2 == 0) ? diff : -diff;
    }
    out.add_term(z, c);
  }
  return out;
}

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::bijection:
      return "bijection";
    case Backend::sundaram:
      return "sundaram";
    case Backend::character:
      return "character";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "bijection") return Backend::bijection;
  if (name == "sundaram") return Backend::sundaram;
  if (name == "character") return Backend::character;
  return std::nullopt;
}

std::map<Partition, std::int64_t> decompose_sp(LaurentPoly character, int n) {
  std::map<Partition, std::int64_t> out;
  std::map<Partition, LaurentPoly> basis;
  while (auto lead = character.leading_term()) {
    const auto& [e, c] = *lead;
    const bool dominant = std::is_sorted(e.rbegin(), e.rend()) && (e.empty() || e.back() >= 0);
    if (!dominant) throw NonDecomposable("leading exponent is not a dominant weight");
    if (c < 0) throw NonDecomposable("negative multiplicity in character decomposition");
    const Partition nu = Partition::from_parts_allow_zeros(e);
    auto it = basis.find(nu);
    if (it == basis.end()) it = basis.emplace(nu, sp_schur(nu, n)).first;
    const LaurentPoly::Coeff coeff = c;
    if (it->second.leading_term()->first != e) throw NonDecomposable("symplectic Schur function has unexpected leading term");
    character.add_scaled(it->second, -coeff);
    out[nu] += coeff;
  }
  return out;
}

MultiplicityTable branching_multiplicities(const Partition& lambda, int n, Backend backend) {
  if (n < 1) throw ValidationError("n must be positive");
  if (lambda.length() > 2 * n) {
    throw ValidationError("length of " + lambda.to_string() + " exceeds 2n = " + std::to_string(2 * n));
  }
  MultiplicityTable table{lambda, n, backend, {}};
  if (backend == Backend::character) {
    table.entries = decompose_sp(restrict_character(schur(lambda, 2 * n), n), n);
    return table;
  }
  for (const auto& nu : enumerate_partitions(n, lambda)) {
    const auto count = static_cast<std::int64_t>(backend == Backend::bijection ? enumerate_recording(lambda, nu, n).size()
                                                                               : enumerate_lrsp(lambda, nu, n).size());
    if (count > 0) table.entries.emplace(nu, count);
  }
  return table;
}

}  // namespace spbranch
