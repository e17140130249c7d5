// asymcover: bounds, constructions and exact values for asymmetric covering codes.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asymcover/bounds.hpp"
#include "asymcover/code_io.hpp"
#include "asymcover/constructions.hpp"
#include "asymcover/cube.hpp"
#include "asymcover/errors.hpp"
#include "asymcover/exact_search.hpp"
#include "asymcover/ip_bounds.hpp"
#include "asymcover/linear_codes.hpp"
#include "asymcover/table.hpp"

using namespace asymcover;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kBudget = 3 };

struct Globals {
  std::uint64_t seed = 1;
  double time_limit = 600.0;
  std::uint64_t node_limit = 4'000'000'000ULL;
  int workers = 1;
  std::string cache;
  bool json = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::optional<std::string> cache_path(const Globals& g) {
  if (!g.cache.empty()) return g.cache;
  if (const char* env = std::getenv("ASYMCOVER_CACHE"); env && *env) return std::string(env);
  return std::nullopt;
}

ExactLimits exact_limits(const Globals& g) {
  ExactLimits lim;
  lim.time_limit = g.time_limit;
  lim.node_limit = g.node_limit;
  return lim;
}

// ---- bound

struct BoundArgs {
  int n = 1, R = 1;
  bool ip = false, greedy = false, exact = false, full = false;
  int random = 0;
};

int cmd_bound(const BoundArgs& a, const Globals& g) {
  BoundOptions opts = a.full ? BoundOptions::full() : BoundOptions::analytic();
  opts.ip |= a.ip;
  opts.greedy |= a.greedy;
  opts.exact |= a.exact;
  if (a.exact) opts.exact_max_n = kMaxExactDimension;
  if (a.random > 0) opts.random_trials = a.random;
  opts.seed = g.seed;
  opts.exact_limits = exact_limits(g);
  const BoundRecord r = best_bounds(a.n, a.R, opts);
  if (g.json)
    print_json(record_to_json(r));
  else
    std::cout << r.render() << "\n";
  return kOk;
}

// ---- construct

struct ConstructArgs {
  std::string method;
  std::optional<int> n, R, coradius, m;
  std::string out, left, right;
};

int require_set(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("this method needs ") + flag);
  return *v;
}

// --coradius, or n - R from --r
int coradius_of(const ConstructArgs& a) {
  const int n = require_set(a.n, "--n");
  if (a.coradius) return *a.coradius;
  if (!a.R) throw InvalidArgument("this method needs --coradius or --r");
  return n - *a.R;
}

int cmd_construct(const ConstructArgs& a, const Globals& g) {
  Code code;
  if (a.method == "diagonal") {
    code = diagonal_code(require_set(a.n, "--n"), coradius_of(a));
  } else if (a.method == "general") {
    code = general_upper_code(require_set(a.n, "--n"), coradius_of(a));
  } else if (a.method == "greedy") {
    const int R = require_set(a.R, "--r");
    code = greedy_code(require_set(a.n, "--n"), R).with_radius(R);
  } else if (a.method == "nu-random") {
    const int R = require_set(a.R, "--r");
    code = random_code_nu(require_set(a.n, "--n"), R, g.seed).with_radius(R);
  } else if (a.method == "power2") {
    code = inductive_power2(require_set(a.m, "--m"), require_set(a.R, "--r"), g.seed);
  } else if (a.method == "directsum") {
    if (a.left.empty() || a.right.empty()) throw InvalidArgument("directsum needs --left and --right code files");
    code = direct_sum(load_code(a.left, &std::cerr), load_code(a.right, &std::cerr));
  } else if (a.method == "semidirect") {
    // random patched code on --n coordinates, then (S (+) Q_k) u (T (+) c) with c from --right
    if (a.right.empty()) throw InvalidArgument("semidirect needs --right code file");
    const Code c = load_code(a.right, &std::cerr);
    if (!c.radius()) throw InvalidArgument("semidirect: the --right code needs a radius");
    const Rational delta = Rational(c.size()) / Rational(BigInt(1) << c.n());
    code = semi_direct_sum(random_patched(require_set(a.n, "--n"), *c.radius(), delta, g.seed), c);
  } else {
    throw InvalidArgument("unknown method '" + a.method + "'");
  }
  if (!code.radius()) throw InvalidArgument("construction has no radius");
  const bool ok = code.n() <= kMaxSweepDimension ? covers(code, *code.radius()) : false;
  if (!ok) {
    std::cerr << "error: constructed code failed verification\n";
    return kVerifyFailed;
  }
  if (!a.out.empty()) save_code(code, a.out);
  if (g.json) {
    json j = {{"method", a.method}, {"n", code.n()}, {"R", *code.radius()}, {"size", code.size()}, {"verified", true}};
    if (!a.out.empty())
      j["out"] = a.out;
    else
      j["code"] = code_to_json(code);
    print_json(j);
  } else {
    std::cout << "size " << code.size() << " (n=" << code.n() << ", R=" << *code.radius() << ", verified)\n";
    if (a.out.empty())
      std::cout << code_to_plaintext(code);
    else
      std::cout << "wrote " << a.out << "\n";
  }
  return kOk;
}

// ---- verify

int cmd_verify(const std::string& path, std::optional<int> r_override, const Globals& g) {
  const Code code = load_code(path, &std::cerr);
  if (code.n() > kMaxSweepDimension) throw CapExceeded("verify: n exceeds 30");
  const std::optional<int> R = r_override ? r_override : code.radius();
  if (!R) throw InvalidArgument("the code file has no radius; pass --r");
  const auto missing = uncovered(code, *R);
  const auto radius = asym_covering_radius(code);
  const LevelProfile profile = level_profile(code);
  const std::int64_t zeros = profile.zeros(code.n()), ones = profile.ones();
  const bool ok = missing.empty();
  if (g.json) {
    print_json({{"n", code.n()},
                {"R", *R},
                {"covers", ok},
                {"uncovered", missing.size()},
                {"radius", radius ? json(*radius) : json(nullptr)},
                {"size", code.size()},
                {"levels", profile.counts},
                {"zeros_total", zeros},
                {"ones_total", ones}});
  } else {
    std::cout << "covers: " << (ok ? "true" : "false");
    if (!ok) std::cout << ", " << missing.size() << " uncovered";
    std::cout << ", radius: " << (radius ? std::to_string(*radius) : std::string("none")) << ", size "
              << code.size() << ", zeros total " << zeros << "\n";
    std::cout << "levels:";
    for (auto c : profile.counts) std::cout << ' ' << c;
    std::cout << "\nones total " << ones << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- table

struct TableArgs {
  int n_min = 2, n_max = 13, R_min = 1, R_max = 11;
  bool analytic = false;
  int random = 4;
  int exact_max_n = kMaxExactDimension;
};

int cmd_table(const TableArgs& a, const Globals& g) {
  TableSpec spec;
  spec.n_min = a.n_min;
  spec.n_max = a.n_max;
  spec.R_min = a.R_min;
  spec.R_max = a.R_max;
  spec.budget = a.analytic ? BoundOptions::analytic() : BoundOptions::full();
  if (!a.analytic) {
    spec.budget.random_trials = a.random;
    spec.budget.exact_max_n = a.exact_max_n;
  }
  spec.budget.seed = g.seed;
  spec.budget.exact_limits = exact_limits(g);
  spec.cache_path = cache_path(g);
  spec.workers = g.workers;
  if (a.random < 0 || a.exact_max_n < 0) throw InvalidArgument("table: budget fields must be nonnegative");
  const BoundGrid grid = compute_table(spec, &std::cerr);
  if (g.json)
    print_json(grid_to_json(grid));
  else
    std::cout << render_table(grid, spec);
  return kOk;
}

// ---- exact

int cmd_exact(int n, int R, const std::string& out, bool progress, const Globals& g) {
  ExactLimits lim = exact_limits(g);
  lim.progress = progress;
  const ExactResult r = exact_kplus(n, R, lim);
  if (!out.empty()) save_code(r.witness, out);
  if (g.json) {
    json j = {{"n", n},
              {"R", R},
              {"status", r.is_exact() ? "exact" : "bracket"},
              {"lower", r.lower},
              {"upper", r.upper},
              {"nodes", r.nodes},
              {"elapsed", r.elapsed},
              {"witness", code_to_json(r.witness)}};
    if (r.is_exact()) j["value"] = r.value();
    print_json(j);
  } else {
    if (r.is_exact())
      std::cout << r.value() << "\n";
    else
      std::cout << "bracket " << r.lower << "-" << r.upper << "\n";
    if (!out.empty()) std::cout << "witness: " << out << "\n";
    std::cerr << r.nodes << " nodes, " << r.elapsed << " s\n";
  }
  return r.is_exact() ? kOk : kBudget;
}

// ---- linear

int cmd_linear(int n, int R, bool exhaustive, const Globals& g) {
  const int k = linear_dim_formula(n, R);
  const LinearCode a = a_code(n, R);
  const bool verified = a.n <= kMaxLinearRadiusDimension && covers(a.span, R);
  std::optional<int> searched;
  if (exhaustive) searched = min_linear_dim(n, R, true);
  std::optional<int> radius;
  if (a.n <= kMaxLinearRadiusDimension) radius = asym_covering_radius(a);
  const bool agree = !searched || *searched == k;
  if (g.json) {
    json basis = json::array();
    for (Codeword b : a.basis) basis.push_back(to_bitstring(b, n));
    json j = {{"n", n},
              {"R", R},
              {"k_plus", k},
              {"a_code_dim", a.dim()},
              {"basis", basis},
              {"covers", verified},
              {"radius", radius ? json(*radius) : json(nullptr)},
              {"self_complementary", is_self_complementary(a)}};
    if (searched) j["exhaustive"] = *searched;
    print_json(j);
  } else {
    std::cout << "k+ = " << k;
    if (searched) {
      if (agree)
        std::cout << " (exhaustive agrees)";
      else
        std::cout << " (exhaustive: " << *searched << ")";
    }
    std::cout << "\nA(" << n << "," << R << "): dim " << a.dim() << ", basis";
    for (Codeword b : a.basis) std::cout << ' ' << to_bitstring(b, n);
    std::cout << "\ncovers: " << (verified ? "true" : "false")
              << ", radius: " << (radius ? std::to_string(*radius) : std::string("none"))
              << ", self-complementary: " << (is_self_complementary(a) ? "true" : "false") << "\n";
  }
  return verified && agree && a.dim() == k ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetric binary covering codes: bounds, constructions, exact values"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized constructions");
  app.add_option("--time-limit", g.time_limit, "Exact search time limit in seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--node-limit", g.node_limit, "Exact search node limit");
  app.add_option("--workers", g.workers, "Worker threads for table")->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache, "Bounds cache file (default: $ASYMCOVER_CACHE)");
  app.add_flag("--json", g.json, "Machine-readable output");

  int rc = kOk;

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Best bounds for one cell")->fallthrough();
  bound->add_option("--n", ba.n)->required();
  bound->add_option("--r", ba.R)->required();
  bound->add_flag("--ip", ba.ip, "Use the level integer programs");
  bound->add_flag("--greedy", ba.greedy, "Use the greedy construction");
  bound->add_flag("--exact", ba.exact, "Use exact search (n <= 7)");
  bound->add_option("--random", ba.random, "Random construction trials")->check(CLI::NonNegativeNumber);
  bound->add_flag("--full", ba.full, "All sources");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build and verify a code")->fallthrough();
  construct->add_option("--method", ca.method, "diagonal, directsum, semidirect, greedy, nu-random, power2 or general")->required();
  construct->add_option("--n", ca.n);
  construct->add_option("--r", ca.R);
  construct->add_option("--coradius", ca.coradius);
  construct->add_option("--m", ca.m, "power2: length 2^m");
  construct->add_option("--left", ca.left, "directsum: first code file");
  construct->add_option("--right", ca.right, "directsum/semidirect: second code file");
  construct->add_option("--out", ca.out, "Write the code as JSON");

  std::string verify_file;
  std::optional<int> verify_r;
  auto* verify = app.add_subcommand("verify", "Check a code file")->fallthrough();
  verify->add_option("file", verify_file)->required();
  verify->add_option("--r", verify_r, "Radius (default: the file's)");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Bounds table")->fallthrough();
  table->add_option("--n-min", ta.n_min);
  table->add_option("--n-max", ta.n_max);
  table->add_option("--r-min", ta.R_min);
  table->add_option("--r-max", ta.R_max);
  table->add_flag("--analytic", ta.analytic, "Closed forms only");
  table->add_option("--random", ta.random, "Random construction trials per cell");
  table->add_option("--exact-max-n", ta.exact_max_n, "Largest n handed to exact search");

  int en = 1, eR = 1;
  std::string exact_out;
  bool exact_progress = false;
  auto* exact = app.add_subcommand("exact", "Exact K+(n,R) for n <= 7")->fallthrough();
  exact->add_option("--n", en)->required();
  exact->add_option("--r", eR)->required();
  exact->add_option("--out", exact_out, "Write the witness as JSON");
  exact->add_flag("--progress", exact_progress, "Report each finished size on stderr");

  int ln = 1, lR = 1;
  bool exhaustive = false;
  auto* linear = app.add_subcommand("linear", "Linear codes")->fallthrough();
  linear->add_option("--n", ln)->required();
  linear->add_option("--r", lR)->required();
  linear->add_flag("--exhaustive", exhaustive, "Search all subspaces (n <= 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bound) rc = cmd_bound(ba, g);
    if (*construct) rc = cmd_construct(ca, g);
    if (*verify) rc = cmd_verify(verify_file, verify_r, g);
    if (*table) rc = cmd_table(ta, g);
    if (*exact) rc = cmd_exact(en, eR, exact_out, exact_progress, g);
    if (*linear) rc = cmd_linear(ln, lR, exhaustive, g);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
