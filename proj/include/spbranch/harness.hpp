#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spbranch/partition.hpp"
#include "spbranch/tableau.hpp"

namespace spbranch::harness {

struct Config {
  int max_n = 2;      ///< LR-map grid: n in [1, max_n]
  int max_size = 6;   ///< LR-map grid: |lambda| <= max_size, length <= 2n
  int workers = 1;
  std::uint64_t seed = 1;

  int column_max_n = 4;        ///< column suites: every column over [1,2n]
  int rmatrix_max_m = 5;
  int pieri_max_m = 4;
  int pieri_max_size = 5;
  int successor_max_n = 3;
  int successor_max_size = 6;

  /// Harness self-test: replaces red by the identity in the factorization suite.
  bool corrupt_reduce = false;
};

struct SuiteReport {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  /// First failure in grid order (smallest n, then smallest case).
  std::optional<std::string> counterexample;
  double seconds = 0.0;

  bool passed() const noexcept { return failures == 0; }
};

/// (n, lambda) pairs with n in [1, max_n], |lambda| <= max_size and
/// length(lambda) <= 2n, ordered by n then size then lex-decreasing lambda.
std::vector<std::pair<int, Partition>> lambda_grid(int max_n, int max_size);

/// Every column over [1, 2n] ordered by length, then lexicographically.
std::vector<Column> all_columns(int n);

/// Runs f(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& f);

/// LR map bijectivity onto SpT x Rec and Rec = Rec~, as two reports
/// ("bijectivity", "recording").
std::vector<SuiteReport> run_lr_suites(const Config& config);
/// bijection / sundaram / character agreement plus the dimension identity.
SuiteReport run_multiplicity_suite(const Config& config);
SuiteReport run_factorization_suite(const Config& config);
SuiteReport run_rmatrix_suite(const Config& config);
SuiteReport run_pieri_suite(const Config& config);
SuiteReport run_removable_suite(const Config& config);
SuiteReport run_successor_suite(const Config& config);
/// Random nonnegative combinations of symplectic Schur functions decompose
/// back to their coefficients.
SuiteReport run_independence_suite(const Config& config);

/// Suite names accepted by run_suites, in run order.
const std::vector<std::string>& suite_names();

/// Runs the named suites (all when `names` is empty).
/// Throws std::invalid_argument on an unknown name.
std::vector<SuiteReport> run_suites(const Config& config, const std::vector<std::string>& names = {});

}  // namespace spbranch::harness
