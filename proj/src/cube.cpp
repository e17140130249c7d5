#include "asymcover/cube.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace asymcover {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxDimension + 1>, kMaxDimension + 1>;

PascalTable make_pascal() {
  PascalTable t{};
  for (int n = 0; n <= kMaxDimension; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

const PascalTable& pascal() {
  static const PascalTable table = make_pascal();
  return table;
}

void check_dimension(int n, int cap) {
  if (n < 1 || n > cap)
    throw CapExceeded("dimension " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
}

class Bitmap {
 public:
  explicit Bitmap(int n) : bits_((std::size_t{1} << n) / 64 + 1, 0) {}
  void set(Codeword v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool test(Codeword v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }

 private:
  std::vector<std::uint64_t> bits_;
};

Bitmap sweep(const Code& code, int R) {
  check_dimension(code.n(), kMaxSweepDimension);
  Bitmap marked(code.n());
  for (Codeword c : code) for_each_in_ball_down(c, R, [&](Codeword y) { marked.set(y); });
  return marked;
}

void check_coordinate(const Code& code, int i) {
  if (code.n() < 2) throw InvalidArgument("contraction/shortening needs n >= 2");
  if (i < 1 || i > code.n()) throw InvalidArgument("coordinate " + std::to_string(i) + " outside [1, n]");
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxDimension) throw CapExceeded("binomial: n outside [0, 62]");
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

std::uint64_t ball_size_up(int n, int l, int R) { return ball_size_down(n, n - l, R); }

std::uint64_t ball_size_down(int /*n*/, int l, int R) {
  std::uint64_t s = 0;
  for (int j = 0; j <= std::min(R, l); ++j) s += binomial(l, j);
  return s;
}

Code::Code(int n, std::vector<Codeword> words, std::optional<int> radius)
    : n_(n), words_(std::move(words)), radius_(radius) {
  check_dimension(n, kMaxDimension);
  const Codeword mask = top(n);
  for (Codeword w : words_)
    if ((w & ~mask) != 0) throw InvalidArgument("codeword does not fit in dimension " + std::to_string(n));
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(Codeword w) const { return std::binary_search(words_.begin(), words_.end(), w); }

Code Code::with_radius(std::optional<int> r) const {
  Code c = *this;
  c.radius_ = r;
  return c;
}

std::int64_t LevelProfile::total() const {
  std::int64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

std::int64_t LevelProfile::zeros(int n) const {
  std::int64_t s = 0;
  for (std::size_t l = 0; l < counts.size(); ++l) s += (n - static_cast<std::int64_t>(l)) * counts[l];
  return s;
}

std::int64_t LevelProfile::ones() const {
  std::int64_t s = 0;
  for (std::size_t l = 0; l < counts.size(); ++l) s += static_cast<std::int64_t>(l) * counts[l];
  return s;
}

std::vector<Codeword> ball_down(Codeword c, int R, int n) {
  if ((c & ~top(n)) != 0) throw InvalidArgument("ball_down: center outside Q_n");
  std::vector<Codeword> out;
  for_each_in_ball_down(c, R, [&](Codeword y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
  return out;
}

bool covers(const Code& code, int R) {
  const Bitmap marked = sweep(code, R);
  const Codeword last = top(code.n());
  for (Codeword y = 0;; ++y) {
    if (!marked.test(y)) return false;
    if (y == last) return true;
  }
}

std::vector<Codeword> uncovered(const Code& code, int R) {
  const Bitmap marked = sweep(code, R);
  std::vector<Codeword> out;
  const Codeword last = top(code.n());
  for (Codeword y = 0;; ++y) {
    if (!marked.test(y)) out.push_back(y);
    if (y == last) break;
  }
  return out;
}

std::optional<int> asym_covering_radius(const Code& code) {
  if (!code.contains(top(code.n()))) return std::nullopt;
  // 1^ alone covers at radius n, so the answer is at most n.
  int lo = 0, hi = code.n();
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (covers(code, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Codeword delete_coordinate(Codeword v, int i) {
  const Codeword low = (Codeword{1} << (i - 1)) - 1;
  return (v & low) | ((v >> i) << (i - 1));
}

Code contraction(const Code& code, int i) {
  check_coordinate(code, i);
  const Codeword bit = Codeword{1} << (i - 1);
  std::vector<Codeword> out;
  for (Codeword c : code)
    if (c & bit) out.push_back(delete_coordinate(c, i));
  return Code(code.n() - 1, std::move(out), code.radius());
}

Code shortening(const Code& code, int i) {
  check_coordinate(code, i);
  const Codeword bit = Codeword{1} << (i - 1);
  std::vector<Codeword> out;
  for (Codeword c : code)
    if (!(c & bit)) out.push_back(delete_coordinate(c, i));
  return Code(code.n() - 1, std::move(out), code.radius());
}

Code complement_ones(const Code& code) {
  const Codeword mask = top(code.n());
  std::vector<Codeword> out;
  out.reserve(code.size());
  for (Codeword c : code) out.push_back(mask & ~c);
  return Code(code.n(), std::move(out), code.radius());
}

LevelProfile level_profile(const Code& code) {
  LevelProfile p{std::vector<std::int64_t>(code.n() + 1, 0)};
  for (Codeword c : code) ++p.counts[weight(c)];
  return p;
}

}  // namespace asymcover
