#include "asymcover/exact_search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iostream>

#include "asymcover/bounds.hpp"
#include "asymcover/constructions.hpp"
#include "asymcover/errors.hpp"
#include "asymcover/ip_bounds.hpp"

namespace asymcover {

namespace {

// Subset of the (at most 128) vertices of Q_n.
struct VertexSet {
  std::uint64_t w[2] = {0, 0};

  void set(Codeword v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Codeword v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(Codeword v) const { return (w[v >> 6] >> (v & 63)) & 1; }
  bool empty() const { return (w[0] | w[1]) == 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  VertexSet operator&(const VertexSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  VertexSet minus(const VertexSet& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
  bool subset_of(const VertexSet& o) const { return ((w[0] & ~o.w[0]) | (w[1] & ~o.w[1])) == 0; }
  bool operator==(const VertexSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < 2; ++k)
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(static_cast<Codeword>(64 * k + std::countr_zero(x)));
  }
};

struct Stop {};

class SetCover {
 public:
  SetCover(int n, int R, const ExactLimits& limits)
      : n_(n), R_(R), size_(Codeword{1} << n), limits_(limits), start_(std::chrono::steady_clock::now()) {
    ball_.resize(size_);
    cand_.resize(size_);
    for (Codeword c = 0; c < size_; ++c)
      for_each_in_ball_down(c, R, [&](Codeword y) {
        ball_[c].set(y);
        cand_[y].push_back(c);
      });
    for (auto& list : cand_) std::sort(list.begin(), list.end());
  }

  // true and fills `found` if some code with <= k words covers Q_n
  bool search(int k, std::vector<Codeword>& found) {
    const Codeword one = top(n_);
    VertexSet all;
    for (Codeword v = 0; v < size_; ++v) all.set(v);
    chosen_.assign(1, one);  // every covering code contains 1^
    const VertexSet open = all.minus(ball_[one]);
    VertexSet allowed = all;
    allowed.reset(one);
    if (!dfs(open, allowed, k - 1)) return false;
    found = chosen_;
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool dfs(const VertexSet& open, const VertexSet& allowed, int budget) {
    if (open.empty()) return true;
    if (budget == 0) return false;
    if (++nodes_ > limits_.node_limit) throw Stop{};
    if ((nodes_ & 1023) == 0 && elapsed() > limits_.time_limit) throw Stop{};

    // gain of every allowed center on the open set
    std::array<int, 128> gain{};
    allowed.for_each([&](Codeword c) { gain[c] = (ball_[c] & open).count(); });

    // fractional bound: each open vertex needs 1/(best gain through it)
    long double need = 0;
    Codeword pivot = 0;
    int pivot_choices = 1 << 30;
    bool dead = false;
    open.for_each([&](Codeword y) {
      if (dead) return;
      int best = 0, choices = 0;
      for (Codeword c : cand_[y])
        if (allowed.test(c)) {
          best = std::max(best, gain[c]);
          ++choices;
        }
      if (best == 0) {
        dead = true;
        return;
      }
      need += 1.0L / best;
      if (choices < pivot_choices) {
        pivot_choices = choices;
        pivot = y;
      }
    });
    if (dead) return false;
    if (std::ceil(need - 1e-9L) > budget) return false;

    std::vector<Codeword> options;
    for (Codeword c : cand_[pivot])
      if (allowed.test(c)) options.push_back(c);
    // drop centers whose remaining coverage another option also provides
    std::vector<VertexSet> cover(options.size());
    for (std::size_t i = 0; i < options.size(); ++i) cover[i] = ball_[options[i]] & open;
    std::vector<Codeword> kept;
    for (std::size_t i = 0; i < options.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
        if (i == j || !cover[i].subset_of(cover[j])) continue;
        dominated = !(cover[i] == cover[j]) || j < i;
      }
      if (!dominated) kept.push_back(options[i]);
    }
    std::stable_sort(kept.begin(), kept.end(), [&](Codeword a, Codeword b) { return gain[a] > gain[b]; });

    VertexSet rest = allowed;
    for (Codeword c : kept) {
      rest.reset(c);
      chosen_.push_back(c);
      if (dfs(open.minus(ball_[c]), rest, budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const int n_;
  const int R_;
  const Codeword size_;
  const ExactLimits limits_;
  const std::chrono::steady_clock::time_point start_;
  std::vector<VertexSet> ball_;
  std::vector<std::vector<Codeword>> cand_;
  std::vector<Codeword> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_kplus(int n, int R, const ExactLimits& limits) {
  if (n < 1 || R < 1 || R > n) throw InvalidArgument("exact search needs 1 <= R <= n");
  if (n > kMaxExactDimension) throw CapExceeded("exact search: n exceeds " + std::to_string(kMaxExactDimension));
  if (limits.time_limit < 0) throw InvalidArgument("exact search: negative time limit");

  ExactResult result;
  result.n = n;
  result.R = R;
  result.witness = greedy_code(n, R).with_radius(R);
  result.upper = static_cast<std::int64_t>(result.witness.size());
  result.lower = std::max(asym_sphere_bound(n, R), ip_plus(n, R).value);

  SetCover search(n, R, limits);
  try {
    while (result.lower < result.upper) {
      std::vector<Codeword> found;
      if (search.search(static_cast<int>(result.lower), found)) {
        result.witness = Code(n, found, R);
        result.upper = static_cast<std::int64_t>(result.witness.size());
      } else {
        ++result.lower;
      }
      if (limits.progress)
        std::cerr << "exact (" << n << "," << R << "): [" << result.lower << ", " << result.upper << "] after "
                  << search.nodes() << " nodes\n";
    }
    result.status = ExactResult::Status::exact;
  } catch (const Stop&) {
    result.status = ExactResult::Status::bracket;
  }
  result.nodes = search.nodes();
  result.elapsed = search.elapsed();
  return result;
}

bool verify_optimal(const ExactResult& result) {
  if (!result.is_exact() || result.lower != result.upper) return false;
  if (result.witness.n() != result.n) return false;
  if (static_cast<std::int64_t>(result.witness.size()) != result.upper) return false;
  if (!covers(result.witness, result.R)) return false;
  return ip_plus(result.n, result.R).value <= result.upper;
}

}  // namespace asymcover
