#pragma once

// Bit-level primitives for the n-cube Q_n.
//
// A vertex of Q_n is stored as an unsigned 64-bit mask. Coordinate i
// (1-based) lives in bit i-1, so coordinate 1 is the least significant bit.
// The dimension is carried by the surrounding Code, never by the word.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "asymcover/errors.hpp"

namespace asymcover {

using Codeword = std::uint64_t;

inline constexpr int kMaxDimension = 62;
// covers()/uncovered() keep one flag per vertex of Q_n.
inline constexpr int kMaxSweepDimension = 30;

inline constexpr Codeword top(int n) noexcept { return n == 64 ? ~Codeword{0} : (Codeword{1} << n) - 1; }

inline constexpr int weight(Codeword v) noexcept { return std::popcount(v); }

// x lies below c in the boolean lattice.
inline constexpr bool dominated(Codeword x, Codeword c) noexcept { return (x & c) == x; }

// Exact C(n, k) for 0 <= n <= 62; zero outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

// b+_n(l, R) = sum_{j<=R} C(n-l, j).
std::uint64_t ball_size_up(int n, int l, int R);
// b-_n(l, R) = sum_{j<=R} C(l, j).
std::uint64_t ball_size_down(int n, int l, int R);

/// Calls f(y) for every y below c with w(c) - w(y) <= R, i.e. for every
/// vertex of the downward directed ball around c.
template <class F>
void for_each_in_ball_down(Codeword c, int R, F&& f) {
  const int w = weight(c);
  if (R >= w) {
    // whole down-set: plain submask enumeration
    Codeword s = c;
    while (true) {
      f(s);
      if (s == 0) break;
      s = (s - 1) & c;
    }
    return;
  }
  // clear at most R of the set bits of c
  Codeword bits[64];
  int k = 0;
  for (Codeword t = c; t != 0; t &= t - 1) bits[k++] = t & (~t + 1);
  auto rec = [&](auto&& self, int start, int left, Codeword cur) -> void {
    f(cur);
    if (left == 0) return;
    for (int i = start; i < k; ++i) self(self, i + 1, left - 1, cur & ~bits[i]);
  };
  rec(rec, 0, R, c);
}

/// Calls f(c) for every c above y with w(c) - w(y) <= R inside Q_n.
template <class F>
void for_each_in_ball_up(Codeword y, int R, int n, F&& f) {
  const Codeword free = top(n) & ~y;
  Codeword bits[64];
  int k = 0;
  for (Codeword t = free; t != 0; t &= t - 1) bits[k++] = t & (~t + 1);
  auto rec = [&](auto&& self, int start, int left, Codeword cur) -> void {
    f(cur);
    if (left == 0) return;
    for (int i = start; i < k; ++i) self(self, i + 1, left - 1, cur | bits[i]);
  };
  rec(rec, 0, R, y);
}

// A set of vertices of Q_n, kept sorted and duplicate-free.
class Code {
 public:
  Code() = default;
  explicit Code(int n, std::vector<Codeword> words = {}, std::optional<int> radius = std::nullopt);

  int n() const noexcept { return n_; }
  std::optional<int> radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  std::span<const Codeword> words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  bool contains(Codeword w) const;

  Code with_radius(std::optional<int> r) const;

  friend bool operator==(const Code& a, const Code& b) { return a.n_ == b.n_ && a.words_ == b.words_; }

 private:
  int n_ = 1;
  std::vector<Codeword> words_;
  std::optional<int> radius_;
};

// counts[l] = number of codewords of weight l, l = 0..n.
struct LevelProfile {
  std::vector<std::int64_t> counts;

  std::int64_t total() const;
  // total number of 0 coordinates across the code
  std::int64_t zeros(int n) const;
  std::int64_t ones() const;
  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

std::vector<Codeword> ball_down(Codeword c, int R, int n);

bool covers(const Code& code, int R);
std::vector<Codeword> uncovered(const Code& code, int R);
// Smallest R at which the code downward covers Q_n; nullopt when 1^ is missing.
std::optional<int> asym_covering_radius(const Code& code);

Code contraction(const Code& code, int i);
Code shortening(const Code& code, int i);
Code complement_ones(const Code& code);
LevelProfile level_profile(const Code& code);

// Deletes coordinate i (1-based) from v.
Codeword delete_coordinate(Codeword v, int i);

}  // namespace asymcover
