#pragma once

// Level-count integer programs for K+(n,R).
//
// Variables a_0..a_n count codewords per weight. Row l (0 <= l <= n) asks
// that level l be covered:
//
//     sum_{j=0..R} C(l+j, j) a_{l+j} >= C(n, l),    0 <= a_l <= C(n, l).
//
// IP+   minimizes sum a_l          (lower bound on K+(n,R)).
// IP_phi minimizes sum (n-l) a_l   (lower bound on the zeros of any code).

#include <cstdint>
#include <optional>
#include <vector>

#include "asymcover/cube.hpp"
#include "asymcover/rational.hpp"

namespace asymcover {

class CoveringIP {
 public:
  static CoveringIP plus(int n, int R);
  static CoveringIP phi(int n, int R);

  int n() const noexcept { return n_; }
  int R() const noexcept { return R_; }
  std::int64_t objective(int l) const { return objective_[l]; }
  // Coefficient of a_m in row l; zero outside l <= m <= l+R.
  std::int64_t coefficient(int l, int m) const;
  std::int64_t rhs(int l) const;
  std::int64_t upper(int l) const { return rhs(l); }

  bool feasible(const LevelProfile& a) const;
  std::int64_t value(const LevelProfile& a) const;

  // Dense (n+1) x (n+1) matrix followed by the right-hand side, as CSV.
  std::string to_csv() const;

 private:
  CoveringIP(int n, int R, std::vector<std::int64_t> objective);
  int n_;
  int R_;
  std::vector<std::int64_t> objective_;
};

struct IPSolution {
  std::int64_t value = 0;
  LevelProfile profile;
  std::uint64_t node_count = 0;
};

inline constexpr std::uint64_t kDefaultIPNodeLimit = 100'000'000;
inline constexpr int kMaxIPDimension = 40;

/// Exact optimum by depth-first branch-and-bound over levels n, n-1, ..., 0.
/// Throws BudgetExceeded rather than return a non-optimal value.
IPSolution solve(const CoveringIP& ip, std::uint64_t node_limit = kDefaultIPNodeLimit);

IPSolution ip_plus(int n, int R, std::uint64_t node_limit = kDefaultIPNodeLimit);
IPSolution ip_phi(int n, int R, std::uint64_t node_limit = kDefaultIPNodeLimit);

/// Admissible lower bound on the optimum among completions of `fixed_top`,
/// which assigns a_n, a_{n-1}, ... (fixed_top[0] is a_n). Returns nullopt
/// when a fully fixed row is already violated.
std::optional<Rational> lp_relax_lower(const CoveringIP& ip, const std::vector<std::int64_t>& fixed_top);

}  // namespace asymcover
