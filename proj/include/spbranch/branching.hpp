#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spbranch/reduction.hpp"
#include "spbranch/tableau.hpp"

namespace spbranch {

/// suc(T) = red(a) * T' where (a, T') is the first-column split of T.
/// T must be a straight semistandard tableau over [1, 2n].
Tableau successor(const Tableau& t, int n);

/// Output of the Littlewood-Richardson map.
struct LrResult {
  Tableau p;                           ///< symplectic, shape nu
  Tableau q;                           ///< recording tableau of shape lambda/nu
  std::vector<Partition> trajectory;   ///< lambda = nu^0, nu^1, ..., nu^{k0} = nu
  int steps = 0;                       ///< k0

  friend bool operator==(const LrResult&, const LrResult&) = default;
};

/// One iteration of the LR map, kept for tracing.
struct LrStep {
  Column column;        ///< first column a of P^{k-1}
  RemovableSet removed; ///< Rem(a)
  Column reduced;       ///< red(a)
  Tableau remainder;    ///< P^{k-1} without its first column
  Tableau p;            ///< P^k
  Tableau q;            ///< Q^k
};

/// Iterates the successor map to its first fixpoint, labelling the cells of
/// nu^k / nu^{k+1} with k+1. When `trace` is given, every non-trivial step is
/// appended to it, followed by the terminating step whose Rem is empty.
LrResult lr_map(const Tableau& t, int n, std::vector<LrStep>* trace = nullptr);

/// Checks the axioms (R1)-(R5) on a skew tableau of shape lambda/nu.
/// Returns false when length(nu) > n. Throws ValidationError if Q's shape is
/// not lambda/nu.
bool is_recording(const Tableau& q, const Partition& lambda, const Partition& nu, int n);

/// Every tableau of shape lambda/nu satisfying (R1)-(R5). Labels are searched
/// in [1, |lambda/nu| / 2]: (R3) and (R5) force the used labels to be an
/// initial segment with even positive counts.
std::vector<Tableau> enumerate_recording(const Partition& lambda, const Partition& nu, int n);

/// Memoized inverse of lr_map over SST_{2n}(lambda). Read-only once built.
class LrInverse {
 public:
  LrInverse(const Partition& lambda, int n);

  /// The unique T with lr_map(T) = (p, q). Throws NotInCodomain otherwise.
  const Tableau& lookup(const Tableau& p, const Tableau& q) const;
  std::size_t size() const noexcept { return table_.size(); }
  const Partition& lambda() const noexcept { return lambda_; }

 private:
  Partition lambda_;
  int n_;
  std::map<std::pair<Tableau, Tableau>, Tableau> table_;
};

Tableau lr_inverse_lookup(const Tableau& p, const Tableau& q, const Partition& lambda, int n);

}  // namespace spbranch
