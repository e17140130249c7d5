#pragma once

// Analytic bounds on K+(n,R), grid propagation and the per-cell aggregator.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymcover/exact_search.hpp"

namespace asymcover {

// Where a bound came from. d, i, e, m, s and g follow the usual table legend
// (diagonal, integer program, exhaustive, modified IP, direct sum, greedy);
// m is never produced here.
enum class Tag { none, d, i, e, m, s, g, sphere, mono, superdiag, general, nu };

std::string_view tag_name(Tag t);
Tag tag_from_name(std::string_view s);  // throws ParseError

struct BoundRecord {
  int n = 1;
  int R = 0;
  std::int64_t lower = 1;
  std::int64_t upper = 1;
  Tag lower_tag = Tag::none;
  Tag upper_tag = Tag::none;

  bool exact() const noexcept { return lower == upper; }
  // "4 [superdiag/d]" or "20-25 [i/g]"
  std::string render() const;
  // "4[superdiag/d]" style, for table cells
  std::string render_compact() const;
};

std::int64_t sphere_bound_symmetric(int n, int R);
std::int64_t asym_sphere_bound(int n, int R);

/// Rbar+1 when n >= Rbar(Rbar+1)/2 (then exact), Rbar+2 otherwise.
std::int64_t superdiag_lower(int n, int R);
/// Rbar+1 when a diagonal code of coradius Rbar fits in n coordinates.
std::optional<std::int64_t> diagonal_upper(int n, int R);

/// Size of the cheapest direct sum of diagonal codes with total length n and
/// total coradius Rbar; never below the size of general_upper_code.
std::int64_t general_upper_value(int n, int coradius);

std::int64_t diff_lower(int n, int R, std::int64_t lower_prev, std::int64_t phi_lb);

using BoundGrid = std::map<std::pair<int, int>, BoundRecord>;

/// Tightens lower bounds along n and R and upper bounds over direct-sum
/// splits until nothing changes. Cells outside the grid are used only where
/// forced: K+(n,0) = 2^n and K+(n,R) = 1 for R >= n.
/// Throws DataError if some cell ends with lower > upper.
void propagate(BoundGrid& grid);

struct BoundOptions {
  bool ip = false;
  bool exact = false;
  bool greedy = false;
  int random_trials = 0;  // random_code_nu seeds tried per cell
  std::uint64_t seed = 1;
  int greedy_max_n = 16;
  int random_max_n = 14;
  int exact_max_n = 6;
  int ip_max_n = 20;
  std::uint64_t ip_node_limit = 20'000'000;
  ExactLimits exact_limits{};

  static BoundOptions analytic() { return {}; }
  static BoundOptions full();
};

// Per-cell results of the expensive sources; each is independent of every
// other cell, so they can be computed concurrently.
struct CellSources {
  std::optional<std::int64_t> ip_plus;
  std::optional<std::int64_t> ip_phi;
  std::optional<std::int64_t> greedy;
  std::optional<std::int64_t> random;
  std::optional<ExactResult> exact;
};

CellSources compute_sources(int n, int R, const BoundOptions& opts);

/// Memoizing evaluator: difference chains and direct-sum splits reuse the
/// records of smaller cells.
class BoundsEngine {
 public:
  explicit BoundsEngine(BoundOptions opts) : opts_(std::move(opts)) {}

  const BoundRecord& cell(int n, int R);
  const BoundOptions& options() const { return opts_; }

  /// Computes the sources of every listed cell on up to `workers` threads.
  /// Results do not depend on the number of workers.
  void prefetch(const std::vector<std::pair<int, int>>& cells, int workers);

  const CellSources& sources(int n, int R);

 private:
  std::int64_t chain_lower(int n, int R);
  BoundOptions opts_;
  BoundGrid memo_;
  std::map<std::pair<int, int>, CellSources> sources_;
};

BoundRecord best_bounds(int n, int R, const BoundOptions& opts = {});

}  // namespace asymcover
