#pragma once

// GF(2)-linear asymmetric covering codes.

#include <functional>
#include <optional>
#include <vector>

#include "asymcover/cube.hpp"

namespace asymcover {

inline constexpr int kMaxLinearDim = 20;
inline constexpr int kMaxLinearRadiusDimension = 20;
inline constexpr int kMaxExhaustiveLinearDimension = 6;

struct LinearCode {
  int n = 1;
  std::vector<Codeword> basis;  // reduced row echelon form, pivots descending
  Code span;

  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// Row-reduces the generators and enumerates their span.
LinearCode span(const std::vector<Codeword>& generators, int n);

/// True iff the span equals its ones-complement (for linear codes: 1^ is in it).
bool is_self_complementary(const LinearCode& code);

/// Smallest R the span downward R-covers with; nullopt when 1^ is missing.
std::optional<int> asym_covering_radius(const LinearCode& code);

/// {0^, 1^} for n <= R+1, else A(n-1,R) with one free coordinate appended.
LinearCode a_code(int n, int R);

/// max{1, n-R}.
int linear_dim_formula(int n, int R);

/// Calls f once per subspace of F_2^n (each given by its reduced basis).
void for_each_subspace(int n, const std::function<void(const std::vector<Codeword>&)>& f);

/// Smallest dimension of a subspace of F_2^n with asymmetric covering radius
/// <= R. The exhaustive branch enumerates every subspace (n <= 6); otherwise
/// the closed formula is returned.
int min_linear_dim(int n, int R, bool exhaustive);

}  // namespace asymcover
