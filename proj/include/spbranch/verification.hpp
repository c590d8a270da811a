#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spbranch/error.hpp"
#include "spbranch/laurent.hpp"
#include "spbranch/tableau.hpp"

namespace spbranch {

// ---------------------------------------------------------------------------
// Sundaram's symplectic Littlewood-Richardson tableaux

/// Conditions: semistandard over [1,2n]; the reversed column word is a
/// lattice permutation; wt(T) is a partition with even columns; every odd
/// entry 2k+1 sits in a row i <= n+k.
bool is_symplectic_lr(const Tableau& t, int n);

/// LR^Sp_{2n}(lambda/nu). Cells are filled in reversed column-word order
/// (right to left, top to bottom) so the lattice condition prunes early.
std::vector<Tableau> enumerate_lrsp(const Partition& lambda, const Partition& nu, int n);

/// Sends R to the tableau whose (i,j) entry counts the occurrences of R(i,j)
/// in rows 1..i of R.
Tableau rec_to_lrsp(const Tableau& r);

// ---------------------------------------------------------------------------
// Characters

/// s_lambda(x_1..x_m) as the weight generating function of SST_m(lambda).
LaurentPoly schur(const Partition& lambda, int m);

/// s^Sp_nu(y_1..y_n) over King tableaux, weighted by sp_weight.
LaurentPoly sp_schur(const Partition& nu, int n);

/// Ring map x_{2i-1} -> y_i^{(-1)^{i-1}}, x_{2i} -> y_i^{(-1)^i}.
LaurentPoly restrict_character(const LaurentPoly& p, int n);

// ---------------------------------------------------------------------------
// Branching multiplicities

enum class Backend { bijection, sundaram, character };

std::string_view to_string(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

/// m_{lambda,nu} for every nu with a nonzero multiplicity.
struct MultiplicityTable {
  Partition lambda;
  int n = 0;
  Backend backend = Backend::bijection;
  std::map<Partition, std::int64_t> entries;
};

/// Character elimination left a residue or a negative coefficient.
class NonDecomposable : public InternalError {
 public:
  using InternalError::InternalError;
};

/// bijection: |Rec(lambda/nu)| via enumerate_recording; sundaram:
/// |LR^Sp(lambda/nu)|; character: leading-term elimination of the restricted
/// Schur function in the symplectic Schur basis.
/// Throws ValidationError when length(lambda) > 2n.
MultiplicityTable branching_multiplicities(const Partition& lambda, int n, Backend backend);

/// Decomposes a Weyl-invariant character into symplectic Schur functions.
/// Throws NonDecomposable on failure.
std::map<Partition, std::int64_t> decompose_sp(LaurentPoly character, int n);

}  // namespace spbranch
