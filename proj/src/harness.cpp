#include "spbranch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "spbranch/branching.hpp"
#include "spbranch/error.hpp"
#include "spbranch/io.hpp"
#include "spbranch/plactic.hpp"
#include "spbranch/reduction.hpp"
#include "spbranch/rmatrix.hpp"
#include "spbranch/verification.hpp"

namespace spbranch::harness {

namespace {

using Clock = std::chrono::steady_clock;

/// Per-task tally; merged in task order so the reported counterexample is the
/// first one in grid order regardless of scheduling.
struct Tally {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::optional<std::string> first;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (!first) first = describe();
    }
  }
  void merge(const Tally& other) {
    checks += other.checks;
    failures += other.failures;
    if (!first && other.first) first = other.first;
  }
};

SuiteReport finish(std::string name, const Tally& t, Clock::time_point start) {
  SuiteReport r;
  r.name = std::move(name);
  r.checks = t.checks;
  r.failures = t.failures;
  r.counterexample = t.first;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string show(const Tableau& t) { return io::to_json(t)["rows"].dump(); }
std::string show(const Column& c) { return io::format_tuple(c.values()); }

std::string where(int n, const Partition& lambda) { return "n=" + std::to_string(n) + " lambda=" + lambda.to_string(); }

/// Every column over [1, m], by length then lexicographically.
std::vector<Column> columns_over(int m) {
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> v;
    for (int x = 1; x <= m; ++x) {
      if (mask & (1u << (x - 1))) v.push_back(x);
    }
    sets.push_back(std::move(v));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Column> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s), m);
  return out;
}

template <typename Task>
Tally run_tasks(std::size_t count, int workers, Task&& task) {
  std::vector<Tally> tallies(count);
  parallel_for(count, workers, [&](std::size_t i) {
    try {
      task(i, tallies[i]);
    } catch (const std::exception& e) {
      ++tallies[i].failures;
      if (!tallies[i].first) tallies[i].first = std::string("exception: ") + e.what();
    }
  });
  Tally total;
  for (const auto& t : tallies) total.merge(t);
  return total;
}

}  // namespace

std::vector<std::pair<int, Partition>> lambda_grid(int max_n, int max_size) {
  std::vector<std::pair<int, Partition>> grid;
  for (int n = 1; n <= max_n; ++n) {
    for (int size = 0; size <= max_size; ++size) {
      for (auto& lambda : partitions_of(size, 2 * n)) grid.emplace_back(n, std::move(lambda));
    }
  }
  return grid;
}

std::vector<Column> all_columns(int n) { return columns_over(2 * n); }

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& f) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(std::min(threads, count));
  for (std::size_t w = 0; w < std::min(threads, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  }
}

std::vector<SuiteReport> run_lr_suites(const Config& config) {
  const auto start = Clock::now();
  const auto grid = lambda_grid(config.max_n, config.max_size);
  std::vector<Tally> bij(grid.size());
  std::vector<Tally> rec(grid.size());
  parallel_for(grid.size(), config.workers, [&](std::size_t idx) {
    const auto& [n, lambda] = grid[idx];
    Tally& b = bij[idx];
    Tally& r = rec[idx];
    try {
      const auto sst = enumerate_sst(lambda, 2 * n);
      std::map<std::pair<Tableau, Tableau>, const Tableau*> image;
      std::map<Tableau, const Tableau*> successors;
      std::map<Partition, std::set<Tableau>> q_by_nu;
      std::map<Partition, std::int64_t> count_by_nu;
      for (const auto& t : sst) {
        const LrResult res = lr_map(t, n);
        const Partition nu = res.p.outer();
        b.check(is_symplectic(res.p, n) && nu.length() <= n && contains(lambda, nu), [&] {
          return where(n, lambda) + ": P not symplectic for T=" + show(t);
        });
        b.check(res.q.inner() == nu && res.q.outer() == lambda, [&] {
          return where(n, lambda) + ": Q has the wrong shape for T=" + show(t);
        });
        bool strips = true;
        for (std::size_t k = 1; k < res.trajectory.size(); ++k) {
          const auto& big = res.trajectory[k - 1];
          const auto& small = res.trajectory[k];
          const int removed = big.size() - small.size();
          strips = strips && is_vertical_strip(small, big) && removed >= 2 && removed % 2 == 0;
        }
        b.check(strips, [&] { return where(n, lambda) + ": trajectory is not a chain of even vertical strips for T=" + show(t); });

        // Labels used are exactly 1..k0, each an even number >= 2 of times.
        std::map<int, int> label_counts;
        for (const auto& row : res.q.rows()) {
          for (int v : row) ++label_counts[v];
        }
        bool labels_ok = static_cast<int>(label_counts.size()) == res.steps;
        for (const auto& [label, cnt] : label_counts) {
          labels_ok = labels_ok && label >= 1 && label <= res.steps && cnt >= 2 && cnt % 2 == 0;
        }
        r.check(labels_ok, [&] { return where(n, lambda) + ": recording labels malformed for T=" + show(t); });
        r.check(is_recording(res.q, lambda, nu, n), [&] {
          return where(n, lambda) + ": Q fails (R1)-(R5) for T=" + show(t) + " Q=" + show(res.q);
        });

        auto [it, fresh] = image.emplace(std::make_pair(res.p, res.q), &t);
        b.check(fresh, [&] { return where(n, lambda) + ": LR map collides on " + show(*it->second) + " and " + show(t); });
        auto [sit, sfresh] = successors.emplace(successor(t, n), &t);
        b.check(sfresh, [&] {
          return where(n, lambda) + ": successor collides on " + show(*sit->second) + " and " + show(t);
        });
        q_by_nu[nu].insert(res.q);
        ++count_by_nu[nu];
      }

      std::int64_t codomain = 0;
      for (const auto& nu : enumerate_partitions(n, lambda)) {
        const auto spt = enumerate_spt(nu, n);
        const auto recs = enumerate_recording(lambda, nu, n);
        const auto product = static_cast<std::int64_t>(spt.size() * recs.size());
        codomain += product;
        b.check(count_by_nu[nu] == product, [&] {
          return where(n, lambda) + " nu=" + nu.to_string() + ": image has " + std::to_string(count_by_nu[nu]) +
                 " pairs, |SpT| x |Rec~| = " + std::to_string(product);
        });
        const std::set<Tableau> rec_set(recs.begin(), recs.end());
        r.check(rec_set == q_by_nu[nu], [&] {
          return where(n, lambda) + " nu=" + nu.to_string() + ": Rec (" + std::to_string(q_by_nu[nu].size()) +
                 ") differs from the (R1)-(R5) set (" + std::to_string(rec_set.size()) + ")";
        });
        std::set<Tableau> lrsp_image;
        bool lands = true;
        for (const auto& q : recs) {
          Tableau s = rec_to_lrsp(q);
          lands = lands && is_symplectic_lr(s, n);
          lrsp_image.insert(std::move(s));
        }
        r.check(lands && lrsp_image.size() == recs.size(), [&] {
          return where(n, lambda) + " nu=" + nu.to_string() + ": Rec~ -> LR^Sp is not an injection into LR^Sp";
        });
      }
      b.check(codomain == static_cast<std::int64_t>(sst.size()), [&] {
        return where(n, lambda) + ": codomain size " + std::to_string(codomain) + " != |SST| " + std::to_string(sst.size());
      });
    } catch (const std::exception& e) {
      b.check(false, [&] { return where(n, lambda) + ": exception: " + e.what(); });
    }
  });
  Tally bt;
  Tally rt;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bt.merge(bij[i]);
    rt.merge(rec[i]);
  }
  return {finish("bijectivity", bt, start), finish("recording", rt, start)};
}

SuiteReport run_multiplicity_suite(const Config& config) {
  const auto start = Clock::now();
  const auto grid = lambda_grid(config.max_n, config.max_size);
  const Tally total = run_tasks(grid.size(), config.workers, [&](std::size_t idx, Tally& t) {
    const auto& [n, lambda] = grid[idx];
    const auto bij = branching_multiplicities(lambda, n, Backend::bijection);
    const auto sun = branching_multiplicities(lambda, n, Backend::sundaram);
    const auto chr = branching_multiplicities(lambda, n, Backend::character);
    auto dump = [](const MultiplicityTable& m) { return io::to_json(m)["multiplicities"].dump(); };
    t.check(bij.entries == sun.entries, [&] {
      return where(n, lambda) + ": bijection " + dump(bij) + " vs sundaram " + dump(sun);
    });
    t.check(bij.entries == chr.entries, [&] {
      return where(n, lambda) + ": bijection " + dump(bij) + " vs character " + dump(chr);
    });
    std::int64_t dim = 0;
    for (const auto& [nu, m] : chr.entries) dim += m * static_cast<std::int64_t>(enumerate_spt(nu, n).size());
    const auto sst = static_cast<std::int64_t>(enumerate_sst(lambda, 2 * n).size());
    t.check(dim == sst, [&] {
      return where(n, lambda) + ": sum m*|SpT| = " + std::to_string(dim) + " but |SST| = " + std::to_string(sst);
    });
  });
  return finish("multiplicities", total, start);
}

SuiteReport run_factorization_suite(const Config& config) {
  const auto start = Clock::now();
  Tally total;
  for (int n = 1; n <= config.column_max_n; ++n) {
    for (const auto& a : all_columns(n)) {
      const Column red = config.corrupt_reduce ? a : reduce(a, n);
      try {
        const Column factored = reduce_factored(a, n);
        total.check(factored.values() == red.values(), [&] {
          return "n=" + std::to_string(n) + " column " + show(a) + ": red = " + show(red) + ", factored = " + show(factored);
        });
      } catch (const InternalError& e) {
        total.check(false, [&] { return "n=" + std::to_string(n) + " column " + show(a) + ": " + e.what(); });
      }
    }
  }
  return finish("factorization", total, start);
}

SuiteReport run_rmatrix_suite(const Config& config) {
  const auto start = Clock::now();
  Tally total;
  for (int m = 1; m <= config.rmatrix_max_m; ++m) {
    const auto cols = columns_over(m);
    for (const auto& a : cols) {
      for (const auto& b : cols) {
        auto pair_name = [&] { return "m=" + std::to_string(m) + " (" + show(a) + "," + show(b) + ")"; };
        const ColumnPair r = r_matrix(a, b);
        total.check(r.left.size() == b.size() && r.right.size() == a.size(), [&] { return pair_name() + ": sizes not swapped"; });
        total.check(r_matrix(r.left, r.right) == ColumnPair{a, b}, [&] { return pair_name() + ": R o R != id"; });
        if (a.size() == b.size()) {
          total.check(detail::r_matrix_short_left(a, b) == detail::r_matrix_long_left(a, b),
                      [&] { return pair_name() + ": the two rules disagree at k = l"; });
        }
        const bool a_in_b = a.size() <= b.size() &&
                            std::includes(b.values().begin(), b.values().end(), a.values().begin(), a.values().end());
        if (a_in_b) {
          total.check(r == ColumnPair{b, a} && r_matrix(b, a) == ColumnPair{a, b},
                      [&] { return pair_name() + ": subset pair is not swapped"; });
        }
      }
    }
  }
  return finish("rmatrix", total, start);
}

SuiteReport run_pieri_suite(const Config& config) {
  const auto start = Clock::now();
  Tally total;
  for (int m = 1; m <= config.pieri_max_m; ++m) {
    const auto cols = columns_over(m);
    for (int size = 0; size <= config.pieri_max_size; ++size) {
      for (const auto& lambda : partitions_of(size, m)) {
        const auto tabs = enumerate_sst(lambda, m);
        for (int k = 0; k <= m; ++k) {
          auto name = [&] { return "m=" + std::to_string(m) + " lambda=" + lambda.to_string() + " k=" + std::to_string(k); };
          std::set<Tableau> image;
          bool shapes_ok = true;
          bool inverse_ok = true;
          std::size_t domain = 0;
          for (const auto& b : cols) {
            if (b.size() != k) continue;
            for (const auto& t : tabs) {
              ++domain;
              Tableau u = star(b, t);
              const Partition mu = u.outer();
              shapes_ok = shapes_ok && is_vertical_strip(lambda, mu) && mu.size() - lambda.size() == k && mu.length() <= m;
              const auto [b2, t2] = unstar(u, lambda, k, m);
              inverse_ok = inverse_ok && b2 == b && t2 == t;
              image.insert(std::move(u));
            }
          }
          std::size_t target = 0;
          for (const auto& mu : partitions_of(size + k, m)) {
            if (is_vertical_strip(lambda, mu)) target += enumerate_sst(mu, m).size();
          }
          total.check(shapes_ok, [&] { return name() + ": product shape is not lambda plus a vertical k-strip"; });
          total.check(inverse_ok, [&] { return name() + ": unstar o star != id"; });
          total.check(image.size() == domain && domain == target, [&] {
            return name() + ": |domain|=" + std::to_string(domain) + " |image|=" + std::to_string(image.size()) +
                   " |target|=" + std::to_string(target);
          });
        }
      }
    }
  }
  return finish("pieri", total, start);
}

SuiteReport run_removable_suite(const Config& config) {
  const auto start = Clock::now();
  Tally total;
  for (int n = 1; n <= config.column_max_n; ++n) {
    std::map<std::pair<int, std::vector<int>>, Column> preimage;
    for (const auto& a : all_columns(n)) {
      auto name = [&] { return "n=" + std::to_string(n) + " column " + show(a); };
      const int l = a.size();
      const RemovableSet rem = removable_entries(a, n);
      total.check(rem == removable_entries_direct(a, n), [&] { return name() + ": recursive and direct Rem differ"; });
      bool closed = rem.size() % 2 == 0;
      for (int v : rem.values) closed = closed && rem.contains(partner(v));
      total.check(closed, [&] { return name() + ": Rem " + io::format_set(rem.values) + " not closed under partner"; });
      const int kept = l - rem.size();
      total.check(kept >= 0 && kept <= std::min(l, 2 * n - l), [&] { return name() + ": size bound violated"; });
      bool monotone = true;
      for (int k = 0; k <= l; ++k) {
        const Column prefix(std::vector<int>(a.values().begin(), a.values().begin() + k), 2 * n);
        for (int v : removable_entries(prefix, n).values) monotone = monotone && rem.contains(v);
      }
      total.check(monotone, [&] { return name() + ": prefix Rem not contained in Rem"; });
      const Column red = reduce(a, n);
      total.check(is_symplectic_column(red), [&] { return name() + ": red(a) not symplectic"; });
      total.check(reduce(red, n) == red, [&] { return name() + ": red not idempotent"; });
      total.check((red == a) == is_symplectic_column(a), [&] { return name() + ": fixed point iff symplectic fails"; });
      auto [it, fresh] = preimage.emplace(std::make_pair(l, red.values()), a);
      total.check(fresh, [&] { return name() + ": red collides with " + show(it->second); });
    }
  }
  return finish("removable", total, start);
}

SuiteReport run_successor_suite(const Config& config) {
  const auto start = Clock::now();
  const auto grid = lambda_grid(config.successor_max_n, config.successor_max_size);
  const Tally total = run_tasks(grid.size(), config.workers, [&](std::size_t idx, Tally& t) {
    const auto& [n, lambda] = grid[idx];
    std::set<Tableau> images;
    const auto tabs = enumerate_sst(lambda, 2 * n);
    for (const auto& tab : tabs) {
      auto name = [&] { return where(n, lambda) + " T=" + show(tab); };
      const Tableau s = successor(tab, n);
      const bool symplectic = is_symplectic(tab, n);
      t.check((s == tab) == symplectic, [&] { return name() + ": fixpoint iff symplectic fails"; });
      t.check(is_vertical_strip(s.outer(), lambda) && ((s.outer() == lambda) == (s == tab)),
              [&] { return name() + ": successor shape is not a vertical strip below lambda"; });
      if (!symplectic) {
        int i = 1;
        while (tab.at(i, 1) >= 2 * i - 1) ++i;
        t.check(i >= 2 && tab.at(i, 1) == 2 * i - 2 && tab.at(i - 1, 1) == 2 * i - 3,
                [&] { return name() + ": first violating row is not of the form (2i-3, 2i-2)"; });
      }
      images.insert(s);
    }
    t.check(images.size() == tabs.size(), [&] { return where(n, lambda) + ": successor is not injective"; });
  });
  return finish("successor", total, start);
}

SuiteReport run_independence_suite(const Config& config) {
  const auto start = Clock::now();
  Tally total;
  std::mt19937_64 rng(config.seed);
  for (int n = 1; n <= config.max_n; ++n) {
    std::vector<Partition> basis;
    for (int size = 0; size <= std::min(config.max_size, 4); ++size) {
      for (auto& nu : partitions_of(size, n)) basis.push_back(std::move(nu));
    }
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
      LaurentPoly combo(n);
      std::map<Partition, std::int64_t> expected;
      for (const auto& nu : basis) {
        const int c = coeff(rng);
        if (c == 0) continue;
        expected[nu] = c;
        combo.add_scaled(sp_schur(nu, n), c);
      }
      try {
        const auto got = decompose_sp(combo, n);
        total.check(got == expected, [&] { return "n=" + std::to_string(n) + " trial " + std::to_string(trial) + ": decomposition mismatch"; });
      } catch (const NonDecomposable& e) {
        total.check(false, [&] { return "n=" + std::to_string(n) + " trial " + std::to_string(trial) + ": " + e.what(); });
      }
    }
  }
  return finish("independence", total, start);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bijectivity", "recording", "multiplicities", "factorization", "rmatrix",
                                                 "pieri",       "removable", "successor",      "independence"};
  return names;
}

std::vector<SuiteReport> run_suites(const Config& config, const std::vector<std::string>& names) {
  const auto& all = suite_names();
  for (const auto& n : names) {
    if (std::find(all.begin(), all.end(), n) == all.end()) throw std::invalid_argument("unknown suite '" + n + "'");
  }
  auto wanted = [&](const std::string& n) { return names.empty() || std::find(names.begin(), names.end(), n) != names.end(); };
  std::vector<SuiteReport> out;
  if (wanted("bijectivity") || wanted("recording")) {
    for (auto& r : run_lr_suites(config)) {
      if (wanted(r.name)) out.push_back(std::move(r));
    }
  }
  if (wanted("multiplicities")) out.push_back(run_multiplicity_suite(config));
  if (wanted("factorization")) out.push_back(run_factorization_suite(config));
  if (wanted("rmatrix")) out.push_back(run_rmatrix_suite(config));
  if (wanted("pieri")) out.push_back(run_pieri_suite(config));
  if (wanted("removable")) out.push_back(run_removable_suite(config));
  if (wanted("successor")) out.push_back(run_successor_suite(config));
  if (wanted("independence")) out.push_back(run_independence_suite(config));
  return out;
}

}  // namespace spbranch::harness
