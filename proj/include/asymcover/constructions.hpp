#pragma once

// Upper-bound constructions for asymmetric covering codes.

#include <cstdint>
#include <vector>

#include "asymcover/cube.hpp"
#include "asymcover/rational.hpp"

namespace asymcover {

// Largest length any construction builds, and the most words it will build.
inline constexpr int kMaxConstructDimension = 26;
inline constexpr std::uint64_t kMaxBuiltWords = std::uint64_t{1} << 24;

/// Diagonal code of length n and coradius Rbar: Rbar+1 words, word i+1 has
/// i consecutive zeros starting at coordinate (i-1)i/2+1. Downward
/// (n-Rbar)-covers Q_n. Needs n >= Rbar(Rbar+1)/2.
Code diagonal_code(int n, int coradius);

/// All concatenations (x|y); x fills coordinates 1..n1. Radius annotations add.
Code direct_sum(const Code& a, const Code& b);

/// Keeps the first target_n coordinates of every word.
Code project_code(const Code& code, int target_n);

// (S, T): every vertex is downward R-covered by S or lies in T.
struct PatchedCode {
  int n = 1;
  int R = 0;
  Code S;
  Code T;
  Rational delta;

  Rational delta_weight() const { return Rational(S.size()) + delta * Rational(T.size()); }
  bool valid() const;
};

/// (S ⊕ Q_k) ∪ (T ⊕ c). c must carry radius annotation p.R.
Code semi_direct_sum(const PatchedCode& p, const Code& c);

// Per-level inclusion probabilities for the randomized constructions.
struct RandomModel {
  std::uint64_t seed = 0;
  std::vector<double> level_probs;

  // S with each vertex v included with probability level_probs[w(v)].
  Code sample(int n) const;
};

// nu(n,R) = sum_j C(n,j) / b+_n(j,R), exact.
Rational nu(int n, int R);

/// max_{1<=n<=n_cap} nu(n,R) n^R / 2^n; an empirical stand-in for the
/// smallest constant alpha_R with nu(n,R) <= alpha_R 2^n / n^R for all n.
Rational estimate_alpha(int R, int n_cap);

/// Random patched code: vertices of level j < n kept with probability
/// min(ln(delta n^R / alpha_R) / b+_n(j,R), 1), clamped at 0; level n always
/// kept; T is whatever S leaves uncovered.
PatchedCode random_patched(int n, int R, const Rational& delta, std::uint64_t seed);

/// (2^m, R)+ code from the semi-direct-sum recursion starting at {1} ⊂ Q_1,
/// keeping the lowest delta-weight patched code out of `trials` per step.
Code inductive_power2(int m, int R, std::uint64_t seed, int trials = 32);

/// Greedy set cover by downward R-balls; ties go to the smallest mask.
Code greedy_code(int n, int R);

/// Random code with p_w = min(1, ln(2^n/nu) / b+_n(w,R)), then patched.
Code random_code_nu(int n, int R, std::uint64_t seed);

// One block of a direct-sum decomposition.
struct SumBlock {
  enum class Kind { diagonal, greedy };
  Kind kind = Kind::diagonal;
  int length = 1;
  int coradius = 0;
  std::uint64_t size = 1;
};

struct SumPlan {
  std::vector<SumBlock> blocks;
  std::uint64_t size = 0;  // product of block sizes, saturating at UINT64_MAX
};

/// Cheapest direct sum of blocks whose lengths add to n and coradii add to
/// coradius. Diagonal blocks are always available; greedy blocks of length
/// <= max_greedy_length are used when that length is positive.
SumPlan direct_sum_plan(int n, int coradius, int max_greedy_length);

/// (n, n-coradius)+ code realized from direct_sum_plan with greedy blocks
/// of length <= 7.
Code general_upper_code(int n, int coradius);

// Exponent ceil(Rbar^2 / (2n - Rbar)) and the closed-form size bound (2n/Rbar)^M.
int general_block_count(int n, int coradius);
double general_closed_form(int n, int coradius);

}  // namespace asymcover
