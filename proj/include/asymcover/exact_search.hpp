#pragma once

// Exact K+(n,R) for small n: minimum set cover of Q_n by downward R-balls.

#include <cstdint>
#include <optional>

#include "asymcover/cube.hpp"

namespace asymcover {

inline constexpr int kMaxExactDimension = 7;

struct ExactLimits {
  double time_limit = 600.0;  // seconds
  std::uint64_t node_limit = 4'000'000'000ULL;
  bool progress = false;      // one line per finished target on stderr
};

struct ExactResult {
  enum class Status { exact, bracket };

  int n = 0;
  int R = 0;
  Status status = Status::bracket;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  Code witness;
  std::uint64_t nodes = 0;
  double elapsed = 0.0;  // seconds

  bool is_exact() const noexcept { return status == Status::exact; }
  std::int64_t value() const noexcept { return upper; }
};

/// Iterative deepening on the code size, from the level-IP bound up to the
/// greedy size. Every finished size is a proof, so a budget hit still
/// returns a valid bracket with the best code found.
ExactResult exact_kplus(int n, int R, const ExactLimits& limits = {});

/// Re-checks an exact result: witness covers, has `value` words, and the
/// level IP does not exceed it. Minimality itself is not re-proved.
bool verify_optimal(const ExactResult& result);

}  // namespace asymcover
