#include "asymcover/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <string>

#include "asymcover/rng.hpp"

namespace asymcover {

namespace {


void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::optional<int> add_radius(std::optional<int> a, std::optional<int> b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

Code patch(int n, int R, std::vector<Codeword> chosen) {
  Code s(n, std::move(chosen));
  auto missing = uncovered(s, R);
  if (missing.empty()) return s.with_radius(R);
  std::vector<Codeword> all(s.begin(), s.end());
  all.insert(all.end(), missing.begin(), missing.end());
  return Code(n, std::move(all), R);
}

std::uint64_t greedy_size_cached(int length, int R) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::uint64_t> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({length, R}); it != cache.end()) return it->second;
  }
  const std::uint64_t s = greedy_code(length, R).size();
  std::lock_guard lock(mu);
  cache[{length, R}] = s;
  return s;
}

}  // namespace

Code diagonal_code(int n, int coradius) {
  require(coradius >= 0 && coradius <= n, "diagonal_code: coradius must lie in [0, n]");
  if (n < coradius * (coradius + 1) / 2)
    throw InvalidArgument("diagonal_code: dimension too small, need n >= " +
                          std::to_string(coradius * (coradius + 1) / 2));
  std::vector<Codeword> words;
  const Codeword ones = top(n);
  for (int i = 0; i <= coradius; ++i) {
    // zeros at coordinates (i-1)i/2+1 .. (i-1)i/2+i, i.e. bits (i-1)i/2 ..
    const int start = i == 0 ? 0 : (i - 1) * i / 2;
    const Codeword zeros = ((Codeword{1} << i) - 1) << start;
    words.push_back(ones & ~zeros);
  }
  return Code(n, std::move(words), n - coradius);
}

Code direct_sum(const Code& a, const Code& b) {
  const int n = a.n() + b.n();
  if (n > kMaxDimension) throw CapExceeded("direct_sum: dimension " + std::to_string(n) + " exceeds 62");
  if (mul_sat(a.size(), b.size()) > kMaxBuiltWords) throw CapExceeded("direct_sum: result too large");
  std::vector<Codeword> words;
  words.reserve(a.size() * b.size());
  for (Codeword x : a)
    for (Codeword y : b) words.push_back(x | (y << a.n()));
  return Code(n, std::move(words), add_radius(a.radius(), b.radius()));
}

Code project_code(const Code& code, int target_n) {
  require(target_n >= 1 && target_n <= code.n(), "project_code: target_n must lie in [1, n]");
  const Codeword mask = top(target_n);
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (Codeword c : code) words.push_back(c & mask);
  return Code(target_n, std::move(words), code.radius());
}

bool PatchedCode::valid() const {
  if (S.n() != n || T.n() != n) return false;
  for (Codeword y : uncovered(S, R))
    if (!T.contains(y)) return false;
  return true;
}

Code semi_direct_sum(const PatchedCode& p, const Code& c) {
  if (!c.radius() || *c.radius() != p.R)
    throw InvalidArgument("semi_direct_sum: code radius must equal the patched code's radius " + std::to_string(p.R));
  const int k = c.n();
  const int n = p.n + k;
  if (n > kMaxDimension) throw CapExceeded("semi_direct_sum: dimension exceeds 62");
  if (k > kMaxConstructDimension || mul_sat(p.S.size(), std::uint64_t{1} << k) > kMaxBuiltWords)
    throw CapExceeded("semi_direct_sum: result too large");
  std::vector<Codeword> words;
  words.reserve(p.S.size() * (std::size_t{1} << k) + p.T.size() * c.size());
  for (Codeword s : p.S)
    for (Codeword y = 0; y <= top(k); ++y) words.push_back(s | (y << p.n));
  for (Codeword t : p.T)
    for (Codeword y : c) words.push_back(t | (y << p.n));
  return Code(n, std::move(words), p.R);
}

Code RandomModel::sample(int n) const {
  require(static_cast<int>(level_probs.size()) == n + 1, "RandomModel: need n+1 level probabilities");
  if (n > kMaxConstructDimension) throw CapExceeded("RandomModel: n exceeds 26");
  Rng rng(seed);
  std::vector<Codeword> chosen;
  for (Codeword v = 0; v <= top(n); ++v)
    if (rng.bernoulli(level_probs[weight(v)])) chosen.push_back(v);
  return Code(n, std::move(chosen));
}

Rational nu(int n, int R) {
  Rational s = 0;
  for (int j = 0; j <= n; ++j) s += Rational(binomial(n, j)) / Rational(ball_size_up(n, j, R));
  return s;
}

Rational estimate_alpha(int R, int n_cap) {
  require(R >= 1, "estimate_alpha: R >= 1");
  require(n_cap >= 1 && n_cap <= 40, "estimate_alpha: n_cap must lie in [1, 40]");
  Rational best = 0;
  for (int n = 1; n <= n_cap; ++n) {
    const Rational v = nu(n, R) * Rational(boost::multiprecision::pow(BigInt(n), R)) / Rational(BigInt(1) << n);
    best = std::max(best, v);
  }
  return best;
}

namespace {

const Rational& alpha_surrogate(int R) {
  static std::mutex mu;
  static std::map<int, Rational> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(R);
  if (it == cache.end()) it = cache.emplace(R, estimate_alpha(R, 40)).first;
  return it->second;
}

}  // namespace

PatchedCode random_patched(int n, int R, const Rational& delta, std::uint64_t seed) {
  require(R >= 1, "random_patched: R >= 1");
  require(delta >= 0, "random_patched: delta >= 0");
  if (n < 1 || n > kMaxConstructDimension) throw CapExceeded("random_patched: n outside [1, 26]");
  const double scale = to_double(delta) * std::pow(static_cast<double>(n), R) / to_double(alpha_surrogate(R));
  const double log_term = scale > 0 ? std::log(scale) : -1.0;
  RandomModel model{seed, std::vector<double>(n + 1)};
  for (int j = 0; j < n; ++j)
    model.level_probs[j] = std::clamp(log_term / static_cast<double>(ball_size_up(n, j, R)), 0.0, 1.0);
  model.level_probs[n] = 1.0;
  PatchedCode p{n, R, model.sample(n), Code(n), delta};
  p.S = p.S.with_radius(R);
  p.T = Code(n, uncovered(p.S, R));
  return p;
}

Code inductive_power2(int m, int R, std::uint64_t seed, int trials) {
  require(R >= 1, "inductive_power2: R >= 1");
  require(m >= 0, "inductive_power2: m >= 0");
  require(trials >= 1, "inductive_power2: trials >= 1");
  if (m > 4) throw CapExceeded("inductive_power2: 2^m must not exceed 26");
  Code current(1, {1}, R);
  for (int j = 0; j < m; ++j) {
    const int n = 1 << j;
    const Rational delta = Rational(current.size()) / Rational(BigInt(1) << n);
    std::optional<PatchedCode> best;
    for (int t = 0; t < trials; ++t) {
      PatchedCode p = random_patched(n, R, delta, derive_seed(seed + static_cast<std::uint64_t>(j), t));
      if (!best || p.delta_weight() < best->delta_weight()) best = std::move(p);
    }
    current = semi_direct_sum(*best, current);
  }
  if (!covers(current, R)) throw std::logic_error("inductive_power2: semi-direct sum failed to cover");
  return current;
}

Code greedy_code(int n, int R) {
  require(R >= 0, "greedy_code: R >= 0");
  if (n < 1 || n > kMaxConstructDimension) throw CapExceeded("greedy_code: n outside [1, 26]");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint32_t> gain(count);
  std::vector<bool> covered(count, false);
  for (Codeword v = 0; v < count; ++v) gain[v] = static_cast<std::uint32_t>(ball_size_down(n, weight(v), R));

  // max gain first, then smallest mask; entries may be stale (gains only drop)
  using Entry = std::pair<std::uint32_t, Codeword>;
  auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (Codeword v = 0; v < count; ++v) heap.emplace(gain[v], v);

  std::size_t left = count;
  std::vector<Codeword> chosen;
  while (left > 0) {
    const auto [g, v] = heap.top();
    heap.pop();
    if (g != gain[v]) {
      heap.emplace(gain[v], v);
      continue;
    }
    chosen.push_back(v);
    for_each_in_ball_down(v, R, [&](Codeword y) {
      if (covered[y]) return;
      covered[y] = true;
      --left;
      for_each_in_ball_up(y, R, n, [&](Codeword c) { --gain[c]; });
    });
  }
  return Code(n, std::move(chosen), R);
}

Code random_code_nu(int n, int R, std::uint64_t seed) {
  require(R >= 1, "random_code_nu: R >= 1");
  if (n < 1 || n > kMaxConstructDimension) throw CapExceeded("random_code_nu: n outside [1, 26]");
  const double log_term = std::log(std::ldexp(1.0, n) / to_double(nu(n, R)));
  RandomModel model{seed, std::vector<double>(n + 1)};
  for (int w = 0; w <= n; ++w)
    model.level_probs[w] = std::clamp(log_term / static_cast<double>(ball_size_up(n, w, R)), 0.0, 1.0);
  const Code s = model.sample(n);
  return patch(n, R, std::vector<Codeword>(s.begin(), s.end()));
}

SumPlan direct_sum_plan(int n, int coradius, int max_greedy_length) {
  require(n >= 1 && n <= kMaxDimension, "direct_sum_plan: n outside [1, 62]");
  require(coradius >= 0 && coradius <= n, "direct_sum_plan: coradius must lie in [0, n]");
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

  auto block_size = [&](int len, int cor, SumBlock::Kind kind) -> std::uint64_t {
    if (kind == SumBlock::Kind::diagonal) return len >= cor * (cor + 1) / 2 ? static_cast<std::uint64_t>(cor) + 1 : kInf;
    return greedy_size_cached(len, len - cor);
  };

  // best[L][C]: cheapest product using exactly L coordinates and coradius C
  std::vector<std::vector<std::uint64_t>> best(n + 1, std::vector<std::uint64_t>(coradius + 1, kInf));
  std::vector<std::vector<SumBlock>> last(n + 1, std::vector<SumBlock>(coradius + 1));
  best[0][0] = 1;
  for (int L = 1; L <= n; ++L) {
    for (int C = 0; C <= std::min(L, coradius); ++C) {
      for (int len = 1; len <= L; ++len) {
        for (int cor = 0; cor <= std::min(len, C); ++cor) {
          const std::uint64_t prev = best[L - len][C - cor];
          if (prev == kInf) continue;
          for (auto kind : {SumBlock::Kind::diagonal, SumBlock::Kind::greedy}) {
            if (kind == SumBlock::Kind::greedy && len > max_greedy_length) continue;
            const std::uint64_t bs = block_size(len, cor, kind);
            if (bs == kInf) continue;
            const std::uint64_t total = mul_sat(prev, bs);
            if (total < best[L][C]) {
              best[L][C] = total;
              last[L][C] = SumBlock{kind, len, cor, bs};
            }
          }
        }
      }
    }
  }
  SumPlan plan;
  plan.size = best[n][coradius];
  for (int L = n, C = coradius; L > 0;) {
    const SumBlock b = last[L][C];
    plan.blocks.push_back(b);
    L -= b.length;
    C -= b.coradius;
  }
  std::reverse(plan.blocks.begin(), plan.blocks.end());
  return plan;
}

Code general_upper_code(int n, int coradius) {
  require(coradius >= 1 && coradius <= n, "general_upper_code: coradius must lie in [1, n]");
  const SumPlan plan = direct_sum_plan(n, coradius, 7);
  if (plan.size > kMaxBuiltWords) throw CapExceeded("general_upper_code: code too large to build");
  std::optional<Code> acc;
  for (const auto& b : plan.blocks) {
    Code block = b.kind == SumBlock::Kind::diagonal ? diagonal_code(b.length, b.coradius)
                                                    : greedy_code(b.length, b.length - b.coradius);
    acc = acc ? direct_sum(*acc, block) : block;
  }
  return acc->with_radius(n - coradius);
}

int general_block_count(int n, int coradius) {
  require(coradius >= 1 && coradius <= n, "general_block_count: coradius must lie in [1, n]");
  const int num = coradius * coradius, den = 2 * n - coradius;
  return (num + den - 1) / den;
}

double general_closed_form(int n, int coradius) {
  return std::pow(2.0 * n / coradius, general_block_count(n, coradius));
}

}  // namespace asymcover
