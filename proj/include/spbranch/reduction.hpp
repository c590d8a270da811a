#pragma once

#include <vector>

#include "spbranch/tableau.hpp"

namespace spbranch {

/// Rem(a), stored by entry value in increasing order.
struct RemovableSet {
  std::vector<int> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  bool contains(int v) const noexcept;
  friend bool operator==(const RemovableSet&, const RemovableSet&) = default;
};

/// The odd/even partner: a+1 for odd a, a-1 for even a.
constexpr int partner(int a) noexcept { return (a % 2 != 0) ? a + 1 : a - 1; }

/// Rem(a) for a column over [1, 2n], by the left-to-right recursion on
/// prefixes. Throws ValidationError when an entry exceeds 2n.
RemovableSet removable_entries(const Column& a, int n);

/// Rem(a) from the per-entry odd/even criteria, each referring only to the
/// sizes of Rem on shorter prefixes. Independent of removable_entries.
RemovableSet removable_entries_direct(const Column& a, int n);

/// red(a) = a \ Rem(a), order preserved.
Column reduce(const Column& a, int n);

/// King's condition on a single column: a_k >= 2k-1 for every k.
bool is_symplectic_column(const Column& a);

}  // namespace spbranch
