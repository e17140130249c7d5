#include "asymcover/bounds.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "asymcover/constructions.hpp"
#include "asymcover/errors.hpp"
#include "asymcover/ip_bounds.hpp"
#include "asymcover/rational.hpp"
#include "asymcover/rng.hpp"

namespace asymcover {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 12> kTagNames{{
    {Tag::none, "-"},
    {Tag::d, "d"},
    {Tag::i, "i"},
    {Tag::e, "e"},
    {Tag::m, "m"},
    {Tag::s, "s"},
    {Tag::g, "g"},
    {Tag::sphere, "sphere"},
    {Tag::mono, "mono"},
    {Tag::superdiag, "superdiag"},
    {Tag::general, "general"},
    {Tag::nu, "nu"},
}};

constexpr std::int64_t kBig = std::numeric_limits<std::int64_t>::max();

std::int64_t mul_sat(std::int64_t a, std::int64_t b) {
  const __int128 p = static_cast<__int128>(a) * b;
  return p > kBig ? kBig : static_cast<std::int64_t>(p);
}

std::int64_t pow2(int n) { return n >= 63 ? kBig : std::int64_t{1} << n; }

void check_cell(int n, int R) {
  if (n < 1 || n > kMaxDimension) throw InvalidArgument("n outside [1, 62]");
  if (R < 0) throw InvalidArgument("R must be nonnegative");
}

// Values forced by definition, outside any grid.
std::optional<std::int64_t> forced(int n, int R) {
  if (R >= n) return 1;
  if (R == 0) return pow2(n);
  return std::nullopt;
}

// Bound updates: a later source replaces an earlier one only if strictly better.
void raise_lower(BoundRecord& r, std::int64_t v, Tag t) {
  if (v > r.lower) {
    r.lower = v;
    r.lower_tag = t;
  }
}

void cut_upper(BoundRecord& r, std::int64_t v, Tag t) {
  if (v < r.upper) {
    r.upper = v;
    r.upper_tag = t;
  }
}

}  // namespace

std::string_view tag_name(Tag t) {
  for (const auto& [tag, name] : kTagNames)
    if (tag == t) return name;
  return "?";
}

Tag tag_from_name(std::string_view s) {
  for (const auto& [tag, name] : kTagNames)
    if (name == s) return tag;
  throw ParseError("unknown bound tag '" + std::string(s) + "'");
}

std::string BoundRecord::render() const {
  std::string s = exact() ? std::to_string(lower) : std::to_string(lower) + "-" + std::to_string(upper);
  if (lower_tag != Tag::none || upper_tag != Tag::none)
    s += " [" + std::string(tag_name(lower_tag)) + "/" + std::string(tag_name(upper_tag)) + "]";
  return s;
}

std::string BoundRecord::render_compact() const {
  std::string s = exact() ? std::to_string(lower) : std::to_string(lower) + "-" + std::to_string(upper);
  if (lower_tag != Tag::none || upper_tag != Tag::none)
    s += "[" + std::string(tag_name(lower_tag)) + "/" + std::string(tag_name(upper_tag)) + "]";
  return s;
}

std::int64_t sphere_bound_symmetric(int n, int R) {
  check_cell(n, R);
  R = std::min(R, n);
  std::uint64_t ball = 0;
  for (int j = 0; j <= R; ++j) ball += binomial(n, j);
  const std::uint64_t space = static_cast<std::uint64_t>(pow2(n));
  return static_cast<std::int64_t>((space + ball - 1) / ball);
}

std::int64_t asym_sphere_bound(int n, int R) {
  check_cell(n, R);
  Rational sum = 0;
  for (int l = 0; l <= n; ++l) {
    const int top_level = std::min(n, l + R);
    std::uint64_t ball = 0;
    for (int j = 0; j <= std::min(R, top_level); ++j) ball += binomial(top_level, j);
    sum += Rational(binomial(n, l), ball);
  }
  return ceil_to_int64(sum);
}

std::int64_t superdiag_lower(int n, int R) {
  check_cell(n, R);
  if (R >= n) return 1;
  const std::int64_t rbar = n - R;
  return 2 * n >= rbar * (rbar + 1) ? rbar + 1 : rbar + 2;
}

std::optional<std::int64_t> diagonal_upper(int n, int R) {
  check_cell(n, R);
  if (R >= n) return 1;
  const std::int64_t rbar = n - R;
  if (2 * n >= rbar * (rbar + 1)) return rbar + 1;
  return std::nullopt;
}

std::int64_t general_upper_value(int n, int coradius) {
  if (coradius < 0 || coradius > n) throw InvalidArgument("coradius must lie in [0, n]");
  check_cell(n, 0);
  if (coradius == 0) return 1;
  const std::uint64_t size = direct_sum_plan(n, coradius, 0).size;
  return size > static_cast<std::uint64_t>(kBig) ? kBig : static_cast<std::int64_t>(size);
}

std::int64_t diff_lower(int n, int R, std::int64_t lower_prev, std::int64_t phi_lb) {
  check_cell(n, R);
  if (phi_lb <= 0) return lower_prev;
  return lower_prev + (phi_lb + n - 1) / n;
}

void propagate(BoundGrid& grid) {
  auto lower_of = [&](int n, int R) -> std::optional<std::int64_t> {
    if (n < 1) return std::nullopt;
    if (auto v = forced(n, R)) return v;
    auto it = grid.find({n, R});
    return it == grid.end() ? std::nullopt : std::optional<std::int64_t>(it->second.lower);
  };
  auto upper_of = [&](int n, int R) -> std::optional<std::int64_t> {
    if (auto v = forced(n, R)) return v;
    auto it = grid.find({n, R});
    return it == grid.end() ? std::nullopt : std::optional<std::int64_t>(it->second.upper);
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [key, rec] : grid) {
      const auto [n, R] = key;
      if (R >= n || R == 0) continue;
      const BoundRecord before = rec;
      if (auto v = lower_of(n - 1, R)) raise_lower(rec, *v + 1, Tag::mono);
      if (auto v = lower_of(n, R + 1)) raise_lower(rec, *v + 1, Tag::mono);
      for (int n1 = 1; n1 < n; ++n1)
        for (int R1 = 0; R1 <= R; ++R1) {
          const auto a = upper_of(n1, R1), b = upper_of(n - n1, R - R1);
          if (a && b) cut_upper(rec, mul_sat(*a, *b), Tag::s);
        }
      if (rec.lower != before.lower || rec.upper != before.upper) changed = true;
    }
  }
  for (const auto& [key, rec] : grid)
    if (rec.lower > rec.upper)
      throw DataError("inconsistent bounds at (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                      "): " + std::to_string(rec.lower) + " > " + std::to_string(rec.upper));
}

BoundOptions BoundOptions::full() {
  BoundOptions o;
  o.ip = true;
  o.exact = true;
  o.greedy = true;
  o.random_trials = 4;
  o.exact_max_n = 7;
  return o;
}

CellSources compute_sources(int n, int R, const BoundOptions& opts) {
  CellSources src;
  if (forced(n, R)) return src;
  if (opts.ip && n <= std::min(opts.ip_max_n, kMaxIPDimension)) {
    try {
      src.ip_plus = ip_plus(n, R, opts.ip_node_limit).value;
      src.ip_phi = ip_phi(n, R, opts.ip_node_limit).value;
    } catch (const BudgetExceeded&) {
    }
  }
  if (opts.exact && n <= std::min(opts.exact_max_n, kMaxExactDimension)) src.exact = exact_kplus(n, R, opts.exact_limits);
  if (opts.greedy && n <= std::min(opts.greedy_max_n, kMaxConstructDimension))
    src.greedy = static_cast<std::int64_t>(greedy_code(n, R).size());
  if (n <= std::min(opts.random_max_n, kMaxConstructDimension))
    for (int t = 0; t < opts.random_trials; ++t) {
      const auto size = static_cast<std::int64_t>(random_code_nu(n, R, derive_seed(opts.seed, t)).size());
      src.random = src.random ? std::min(*src.random, size) : size;
    }
  return src;
}

void BoundsEngine::prefetch(const std::vector<std::pair<int, int>>& cells, int workers) {
  std::vector<std::pair<int, int>> todo;
  for (const auto& c : cells)
    if (!sources_.count(c)) todo.push_back(c);
  std::vector<CellSources> out(todo.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k; (k = next++) < todo.size();) {
      try {
        out[k] = compute_sources(todo[k].first, todo[k].second, opts_);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (std::size_t k = 0; k < todo.size(); ++k) sources_.emplace(todo[k], std::move(out[k]));
}

const CellSources& BoundsEngine::sources(int n, int R) {
  auto it = sources_.find({n, R});
  if (it == sources_.end()) it = sources_.emplace(std::make_pair(n, R), compute_sources(n, R, opts_)).first;
  return it->second;
}

std::int64_t BoundsEngine::chain_lower(int n, int R) {
  // K+(n,R) - K+(n-1,R) >= phi(n,R)/n >= IP_phi(n,R)/n, and at least 1 since R < n
  const std::int64_t prev = cell(n - 1, R).lower;
  const std::int64_t phi_lb = std::max<std::int64_t>(1, sources(n, R).ip_phi.value_or(1));
  return diff_lower(n, R, prev, phi_lb);
}

const BoundRecord& BoundsEngine::cell(int n, int R) {
  check_cell(n, R);
  if (auto it = memo_.find({n, R}); it != memo_.end()) return it->second;

  BoundRecord rec;
  rec.n = n;
  rec.R = R;
  if (auto v = forced(n, R)) {
    rec.lower = rec.upper = *v;
    return memo_[{n, R}] = rec;
  }
  rec.upper = pow2(n);
  const CellSources src = sources(n, R);

  // lower sources, in priority order
  rec.lower = superdiag_lower(n, R);
  rec.lower_tag = Tag::superdiag;
  if (src.ip_plus) raise_lower(rec, *src.ip_plus, Tag::i);
  if (src.exact) raise_lower(rec, src.exact->lower, Tag::e);
  raise_lower(rec, chain_lower(n, R), Tag::mono);
  if (R + 1 < n) raise_lower(rec, cell(n, R + 1).lower + 1, Tag::mono);
  raise_lower(rec, asym_sphere_bound(n, R), Tag::sphere);

  // upper sources, in priority order
  if (auto v = diagonal_upper(n, R)) cut_upper(rec, *v, Tag::d);
  if (src.exact) cut_upper(rec, src.exact->upper, Tag::e);
  for (int n1 = 1; n1 < n; ++n1)
    for (int R1 = std::max(0, R - (n - n1)); R1 <= std::min(R, n1); ++R1)
      cut_upper(rec, mul_sat(cell(n1, R1).upper, cell(n - n1, R - R1).upper), Tag::s);
  cut_upper(rec, general_upper_value(n, n - R), Tag::general);
  if (src.greedy) cut_upper(rec, *src.greedy, Tag::g);
  if (src.random) cut_upper(rec, *src.random, Tag::nu);

  if (rec.lower > rec.upper)
    throw DataError("inconsistent bounds at (" + std::to_string(n) + "," + std::to_string(R) + ")");
  return memo_[{n, R}] = rec;
}

BoundRecord best_bounds(int n, int R, const BoundOptions& opts) {
  BoundsEngine engine(opts);
  return engine.cell(n, R);
}

}  // namespace asymcover
