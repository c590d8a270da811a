// spbranch: command-line front end for the GL(2n) -> Sp(2n) branching library.
//
// Exit status: 0 success, 1 property failure, 2 usage or validation error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spbranch/branching.hpp"
#include "spbranch/error.hpp"
#include "spbranch/harness.hpp"
#include "spbranch/io.hpp"
#include "spbranch/plactic.hpp"
#include "spbranch/reduction.hpp"
#include "spbranch/rmatrix.hpp"
#include "spbranch/verification.hpp"

namespace {

using namespace spbranch;
using io::json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int m = 0;
  std::string input;
  std::string inline_text;
  std::string format = "json";
  std::string backend = "bijection";
  std::string bench_backend = "all";
  bool all_backends = false;
  bool trace = false;
  int max_n = 2;
  int max_size = 6;
  int workers = 1;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  std::string inject_fault;
  std::string lambda;
  std::string nu;
  std::string column;
  std::string left;
  std::string right;
  std::string kind = "sst";
  int value = 0;
};

std::string read_input(const Options& o) {
  if (!o.inline_text.empty()) return o.inline_text;
  if (o.input.empty()) throw UsageError("no input: pass --input/-i PATH ('-' for stdin) or an inline value");
  if (o.input == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot open input file '" + o.input + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "4,3,2", "4 3 2", "[4,3,2]", "(4,3,2)", "()" all parse.
std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ValidationError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

int require_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be a positive integer");
  return o.n;
}

void check_format(const Options& o) {
  if (o.format != "json" && o.format != "pretty") throw UsageError("--format must be json or pretty");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int run_map(const Options& o) {
  const int n = require_n(o);
  check_format(o);
  const Tableau t = io::parse_tableau(read_input(o));
  if (!t.is_straight()) throw ValidationError("input tableau must have straight shape");
  if (const auto why = io::semistandard_violation(t, 2 * n); !why.empty()) throw ValidationError(why);

  std::vector<LrStep> steps;
  const LrResult result = lr_map(t, n, o.trace ? &steps : nullptr);

  if (o.format == "json") {
    json j = io::to_json(result);
    if (o.trace) {
      json trace = json::array();
      int k = 1;
      for (const auto& s : steps) {
        json step;
        step["k"] = k++;
        step["column"] = io::to_json(s.column);
        step["rem"] = s.removed.values;
        if (s.removed.size() > 0) {
          step["red"] = io::to_json(s.reduced);
          step["p"] = io::to_json(s.p);
          step["q"] = io::to_json(s.q);
        }
        trace.push_back(std::move(step));
      }
      j["trace"] = std::move(trace);
    }
    print_json(j);
    return kOk;
  }

  if (o.trace) {
    int k = 1;
    for (const auto& s : steps) {
      if (s.removed.size() == 0) {
        std::cout << "Rem" << io::format_tuple(s.column.values()) << " = ∅\n\n";
        break;
      }
      std::cout << "Rem" << io::format_tuple(s.column.values()) << " = " << io::format_set(s.removed.values) << "\n";
      std::cout << "P^" << k << " =\n" << io::pretty(s.p);
      std::cout << "Q^" << k << " =\n" << io::pretty(s.q) << "\n";
      ++k;
    }
  }
  std::cout << "P =\n" << io::pretty(result.p) << "Q =\n" << io::pretty(result.q);
  return kOk;
}

Column read_column(const Options& o, const std::string& text, int alphabet) {
  return Column(parse_int_list(text.empty() ? read_input(o) : text), alphabet);
}

int run_reduce(const Options& o) {
  const int n = require_n(o);
  check_format(o);
  const Column a = read_column(o, o.column, 2 * n);
  const RemovableSet rem = removable_entries(a, n);
  const Column red = reduce(a, n);
  if (o.format == "json") {
    json j;
    j["n"] = n;
    j["column"] = io::to_json(a);
    j["rem"] = rem.values;
    j["red"] = io::to_json(red);
    j["symplectic"] = is_symplectic_column(a);
    print_json(j);
  } else {
    std::cout << "Rem" << io::format_tuple(a.values()) << " = " << io::format_set(rem.values) << "\n";
    std::cout << "red" << io::format_tuple(a.values()) << " = " << io::format_tuple(red.values()) << "\n";
  }
  return kOk;
}

int run_insert(const Options& o) {
  check_format(o);
  const int m = o.m > 0 ? o.m : 2 * require_n(o);
  const Tableau t = io::parse_tableau(read_input(o));
  if (!t.is_straight()) throw ValidationError("input tableau must have straight shape");
  if (const auto why = io::semistandard_violation(t, m); !why.empty()) throw ValidationError(why);
  if (o.value < 1 || o.value > m) throw ValidationError("inserted value must lie in [1, " + std::to_string(m) + "]");
  const InsertResult r = column_insert(o.value, t, m);
  if (o.format == "json") {
    json j;
    j["tableau"] = io::to_json(r.tableau);
    j["route"] = r.route.rows;
    print_json(j);
  } else {
    std::cout << io::pretty(r.tableau) << "route = " << io::format_tuple(r.route.rows) << "\n";
  }
  return kOk;
}

int run_rmatrix(const Options& o) {
  check_format(o);
  const int m = o.m > 0 ? o.m : 2 * require_n(o);
  const Column a(parse_int_list(o.left), m);
  const Column b(parse_int_list(o.right), m);
  const ColumnPair r = r_matrix(a, b);
  if (o.format == "json") {
    json j;
    j["input"] = {io::to_json(a), io::to_json(b)};
    j["output"] = {io::to_json(r.left), io::to_json(r.right)};
    print_json(j);
  } else {
    std::cout << "R(" << io::format_tuple(a.values()) << ", " << io::format_tuple(b.values()) << ") = ("
              << io::format_tuple(r.left.values()) << ", " << io::format_tuple(r.right.values()) << ")\n";
  }
  return kOk;
}

std::vector<Backend> selected_backends(const Options& o) {
  if (o.all_backends || o.backend == "all") return {Backend::bijection, Backend::sundaram, Backend::character};
  const auto b = parse_backend(o.backend);
  if (!b) throw UsageError("--backend must be bijection, sundaram, character or all");
  return {*b};
}

int run_table(const Options& o) {
  const int n = require_n(o);
  check_format(o);
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  const Partition lambda = parse_partition(o.lambda);
  const auto backends = selected_backends(o);
  std::vector<MultiplicityTable> tables;
  for (Backend b : backends) tables.push_back(branching_multiplicities(lambda, n, b));
  bool match = true;
  for (const auto& t : tables) match = match && t.entries == tables.front().entries;

  if (o.format == "json") {
    if (tables.size() == 1) {
      print_json(io::to_json(tables.front()));
    } else {
      json j;
      j["tables"] = json::array();
      for (const auto& t : tables) j["tables"].push_back(io::to_json(t));
      j["verdict"] = match ? "match" : "mismatch";
      print_json(j);
    }
  } else {
    for (const auto& t : tables) {
      std::cout << "lambda = " << lambda.to_string() << ", n = " << n << ", backend = " << to_string(t.backend) << "\n";
      for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) {
        std::cout << "  " << it->first.to_string() << "  " << it->second << "\n";
      }
    }
    if (tables.size() > 1) std::cout << (match ? "match" : "mismatch") << "\n";
  }
  return match ? kOk : kPropertyFailure;
}

int run_enumerate(const Options& o) {
  const int n = require_n(o);
  check_format(o);
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  const Partition lambda = parse_partition(o.lambda);
  const Partition nu = o.nu.empty() ? Partition{} : parse_partition(o.nu);

  if (o.kind == "partitions") {
    const auto parts = enumerate_partitions(n, lambda);
    if (o.format == "json") {
      json j = json::array();
      for (const auto& p : parts) j.push_back(io::to_json(p));
      print_json(j);
    } else {
      for (const auto& p : parts) std::cout << p.to_string() << "\n";
    }
    return kOk;
  }

  std::vector<Tableau> tabs;
  if (o.kind == "sst") {
    tabs = enumerate_sst(lambda, 2 * n);
  } else if (o.kind == "spt") {
    tabs = enumerate_spt(lambda, n);
  } else if (o.kind == "recording") {
    tabs = enumerate_recording(lambda, nu, n);
  } else if (o.kind == "lrsp") {
    tabs = enumerate_lrsp(lambda, nu, n);
  } else {
    throw UsageError("--kind must be partitions, sst, spt, recording or lrsp");
  }
  if (o.format == "json") {
    json j = json::array();
    for (const auto& t : tabs) j.push_back(io::to_json(t));
    print_json(j);
  } else {
    std::cout << tabs.size() << " tableaux\n";
    for (const auto& t : tabs) std::cout << "\n" << io::pretty(t);
  }
  return kOk;
}

harness::Config grid_config(const Options& o) {
  if (o.max_n < 1 || o.max_size < 0) throw UsageError("grid bounds must be positive");
  if (o.workers < 1) throw UsageError("--workers must be at least 1");
  harness::Config c;
  c.max_n = o.max_n;
  c.max_size = o.max_size;
  c.workers = o.workers;
  c.seed = o.seed;
  return c;
}

int run_verify(const Options& o) {
  harness::Config config = grid_config(o);
  if (!o.inject_fault.empty()) {
    if (o.inject_fault != "red") throw UsageError("--inject-fault accepts only 'red'");
    config.corrupt_reduce = true;
  }
  std::vector<harness::SuiteReport> reports;
  const auto start = std::chrono::steady_clock::now();
  try {
    reports = harness::run_suites(config, o.suites);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = true;
  std::printf("grid: n <= %d, |lambda| <= %d\n", config.max_n, config.max_size);
  for (const auto& r : reports) {
    std::printf("%-15s %10lld checks %6lld failures  %s\n", r.name.c_str(), static_cast<long long>(r.checks),
                static_cast<long long>(r.failures), r.passed() ? "PASS" : "FAIL");
    ok = ok && r.passed();
  }
  for (const auto& r : reports) {
    if (r.counterexample) std::printf("counterexample [%s]: %s\n", r.name.c_str(), r.counterexample->c_str());
  }
  std::printf("%s\n", ok ? "all suites passed" : "property failure");
  std::fflush(stdout);
  for (const auto& r : reports) std::fprintf(stderr, "time %-15s %.3f s\n", r.name.c_str(), r.seconds);
  std::fprintf(stderr, "wall time %.3f s\n", wall);
  return ok ? kOk : kPropertyFailure;
}

int run_bench(const Options& o) {
  const harness::Config config = grid_config(o);
  const auto grid = harness::lambda_grid(config.max_n, config.max_size);
  Options sel = o;
  sel.backend = o.bench_backend;
  const auto backends = selected_backends(sel);
  struct Row {
    double seconds = 0;
    std::size_t entries = 0;
  };
  const std::size_t per = backends.size();
  std::vector<Row> rows(grid.size() * per);
  harness::parallel_for(rows.size(), config.workers, [&](std::size_t i) {
    const auto& [n, lambda] = grid[i / per];
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = branching_multiplicities(lambda, n, backends[i % per]);
    rows[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows[i].entries = table.entries.size();
  });
  std::cout << "n,lambda,backend,nu_count,seconds\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [n, lambda] = grid[i / per];
    std::cout << n << ",\"" << lambda.to_string() << "\"," << to_string(backends[i % per]) << "," << rows[i].entries
              << "," << rows[i].seconds << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching from GL(2n) to Sp(2n): reduction, LR map, multiplicities and verification."};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "rank n (alphabet [1, 2n])"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "input file, '-' for stdin");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "largest n in the grid");
    sub->add_option("--max-size", o.max_size, "largest |lambda| in the grid");
    sub->add_option("--workers", o.workers, "worker threads");
  };

  auto* map = app.add_subcommand("map", "apply the LR map T -> (P, Q)");
  add_n(map);
  add_input(map);
  add_format(map);
  map->add_option("--tableau", o.inline_text, "inline tableau (JSON or text grid)");
  map->add_flag("--trace", o.trace, "print every iteration");

  auto* red = app.add_subcommand("reduce", "Rem(a) and red(a) for a column");
  add_n(red);
  add_input(red);
  add_format(red);
  red->add_option("column", o.column, "column entries, e.g. 1,2,4,5,6");

  auto* ins = app.add_subcommand("insert", "column insertion w -> T");
  add_n(ins);
  add_input(ins);
  add_format(ins);
  ins->add_option("--m", o.m, "alphabet size (default 2n)");
  ins->add_option("--value,-w", o.value, "letter to insert")->required();
  ins->add_option("--tableau", o.inline_text, "inline tableau (JSON or text grid)");

  auto* rm = app.add_subcommand("rmatrix", "combinatorial R-matrix on a pair of columns");
  add_n(rm);
  add_format(rm);
  rm->add_option("--m", o.m, "alphabet size (default 2n)");
  rm->add_option("left", o.left, "left column")->required();
  rm->add_option("right", o.right, "right column")->required();

  auto* table = app.add_subcommand("table", "branching multiplicities m(lambda, nu)");
  add_n(table);
  add_format(table);
  table->add_option("--lambda", o.lambda, "partition, e.g. 4,3,2,2,1");
  table->add_option("--backend", o.backend, "bijection, sundaram, character or all");
  table->add_flag("--all-backends", o.all_backends, "run all three backends and compare");

  auto* en = app.add_subcommand("enumerate", "list partitions or tableaux");
  add_n(en);
  add_format(en);
  en->add_option("--kind", o.kind, "partitions, sst, spt, recording or lrsp");
  en->add_option("--lambda", o.lambda, "outer partition");
  en->add_option("--nu", o.nu, "inner partition (recording, lrsp)");

  auto* ver = app.add_subcommand("verify", "run the exhaustive property suites");
  add_grid(ver);
  ver->add_option("--seed", o.seed, "seed for randomized sampling");
  ver->add_option("--suite", o.suites, "restrict to the named suites");
  ver->add_option("--inject-fault", o.inject_fault, "harness self-test: 'red' replaces red by the identity");

  auto* bench = app.add_subcommand("bench", "time each backend per lambda (CSV)");
  add_grid(bench);
  bench->add_option("--backend", o.bench_backend, "bijection, sundaram, character or all (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*map) return run_map(o);
    if (*red) return run_reduce(o);
    if (*ins) return run_insert(o);
    if (*rm) return run_rmatrix(o);
    if (*table) return run_table(o);
    if (*en) return run_enumerate(o);
    if (*ver) return run_verify(o);
    if (*bench) return run_bench(o);
  } catch (const UsageError& e) {
    std::cerr << "spbranch: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "spbranch: invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const io::json::exception& e) {
    std::cerr << "spbranch: invalid JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "spbranch: internal error: " << e.what() << "\n";
    return kPropertyFailure;
  }
  return kUsage;
}
