#include "spbranch/reduction.hpp"

#include <algorithm>
#include <string>

#include "spbranch/error.hpp"

namespace spbranch {

namespace {

void require_alphabet(const Column& a, int n) {
  if (n < 1) throw ValidationError("n must be positive");
  if (!a.empty() && a.values().back() > 2 * n) {
    throw ValidationError("column entry " + std::to_string(a.values().back()) + " exceeds 2n = " +
                          std::to_string(2 * n));
  }
}

}  // namespace

bool RemovableSet::contains(int v) const noexcept { return std::binary_search(values.begin(), values.end(), v); }

RemovableSet removable_entries(const Column& a, int n) {
  require_alphabet(a, n);
  const auto& v = a.values();
  const std::size_t l = v.size();
  // count[i] = |Rem(a_1..a_i)|; took_pair[i] records which branch prefix i used.
  std::vector<int> count(l + 1, 0);
  std::vector<bool> took_pair(l + 1, false);
  for (std::size_t i = 2; i <= l; ++i) {
    const int last = v[i - 1];
    const int prev = v[i - 2];
    const int bound = 2 * static_cast<int>(i) - count[i - 2] - 1;
    if (last % 2 == 0 && prev == last - 1 && last < bound) {
      count[i] = count[i - 2] + 2;
      took_pair[i] = true;
    } else {
      count[i] = count[i - 1];
    }
  }
  RemovableSet rem;
  rem.values.reserve(static_cast<std::size_t>(count[l]));
  for (std::size_t i = l; i >= 2;) {
    if (took_pair[i]) {
      rem.values.push_back(v[i - 1]);
      rem.values.push_back(v[i - 2]);
      i -= 2;
    } else {
      i -= 1;
    }
  }
  std::reverse(rem.values.begin(), rem.values.end());
  return rem;
}

RemovableSet removable_entries_direct(const Column& a, int n) {
  require_alphabet(a, n);
  const auto& v = a.values();
  const int l = a.size();
  // Membership of a_i in Rem(a_1..a_j) depends on j only through "i < j" in
  // the odd criterion, so prefix sizes are computed from the criteria alone.
  auto member = [&](int i, int j, const std::vector<int>& sizes) {
    const int x = v[static_cast<std::size_t>(i - 1)];
    if (x % 2 != 0) {
      return i < j && v[static_cast<std::size_t>(i)] == x + 1 && x < 2 * i - sizes[static_cast<std::size_t>(i - 1)];
    }
    return i > 1 && v[static_cast<std::size_t>(i - 2)] == x - 1 &&
           x < 2 * i - sizes[static_cast<std::size_t>(i - 2)] - 1;
  };
  std::vector<int> sizes(static_cast<std::size_t>(l) + 1, 0);
  for (int j = 1; j <= l; ++j) {
    int c = 0;
    for (int i = 1; i <= j; ++i) c += member(i, j, sizes) ? 1 : 0;
    sizes[static_cast<std::size_t>(j)] = c;
  }
  RemovableSet rem;
  for (int i = 1; i <= l; ++i) {
    if (member(i, l, sizes)) rem.values.push_back(v[static_cast<std::size_t>(i - 1)]);
  }
  return rem;
}

Column reduce(const Column& a, int n) {
  const auto rem = removable_entries(a, n);
  std::vector<int> kept;
  kept.reserve(a.values().size() - rem.values.size());
  for (int x : a.values()) {
    if (!rem.contains(x)) kept.push_back(x);
  }
  return Column(std::move(kept), a.alphabet());
}

bool is_symplectic_column(const Column& a) {
  for (int k = 1; k <= a.size(); ++k) {
    if (a[static_cast<std::size_t>(k - 1)] < 2 * k - 1) return false;
  }
  return true;
}

}  // namespace spbranch
