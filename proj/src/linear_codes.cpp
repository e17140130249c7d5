#include "asymcover/linear_codes.hpp"

#include <algorithm>
#include <bit>

#include "asymcover/errors.hpp"

namespace asymcover {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxDimension) throw InvalidArgument("n outside [1, 62]");
}

// pivot of a row = its highest set bit
std::vector<Codeword> reduce(std::vector<Codeword> rows) {
  std::vector<Codeword> basis;
  for (Codeword r : rows) {
    for (Codeword b : basis)
      if (r & (Codeword{1} << (63 - std::countl_zero(b)))) r ^= b;
    if (r == 0) continue;
    const Codeword pivot = Codeword{1} << (63 - std::countl_zero(r));
    for (Codeword& b : basis)
      if (b & pivot) b ^= r;
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

}  // namespace

LinearCode span(const std::vector<Codeword>& generators, int n) {
  check_n(n);
  for (Codeword g : generators)
    if (g & ~top(n)) throw InvalidArgument("generator does not fit in n coordinates");
  LinearCode code;
  code.n = n;
  code.basis = reduce(generators);
  if (code.dim() > kMaxLinearDim) throw CapExceeded("span: dimension exceeds 20");
  std::vector<Codeword> words{0};
  words.reserve(std::size_t{1} << code.dim());
  for (Codeword b : code.basis) {
    const std::size_t half = words.size();
    for (std::size_t i = 0; i < half; ++i) words.push_back(words[i] ^ b);
  }
  code.span = Code(n, std::move(words));
  return code;
}

bool is_self_complementary(const LinearCode& code) { return complement_ones(code.span) == code.span; }

std::optional<int> asym_covering_radius(const LinearCode& code) {
  if (code.n > kMaxLinearRadiusDimension) throw CapExceeded("covering radius: n exceeds 20");
  return asym_covering_radius(code.span);
}

LinearCode a_code(int n, int R) {
  check_n(n);
  if (R < 1) throw InvalidArgument("a_code needs R >= 1");
  if (n <= R + 1) return span({top(n)}, n);
  // A(n-1,R) (+) {0,1}: the old words with 0 and 1 in coordinate n
  LinearCode prev = a_code(n - 1, R);
  std::vector<Codeword> gens;
  gens.reserve(prev.basis.size() + 1);
  for (Codeword b : prev.basis) gens.push_back(b);
  gens.push_back(Codeword{1} << (n - 1));
  return span(gens, n);
}

int linear_dim_formula(int n, int R) {
  check_n(n);
  if (R < 0) throw InvalidArgument("R must be nonnegative");
  return std::max(1, n - R);
}

void for_each_subspace(int n, const std::function<void(const std::vector<Codeword>&)>& f) {
  if (n < 0 || n > kMaxExhaustiveLinearDimension) throw CapExceeded("subspace enumeration: n exceeds 6");
  // choose pivot columns; every row may set any non-pivot column below its pivot
  for (Codeword pivots = 0; pivots < (Codeword{1} << n); ++pivots) {
    std::vector<int> cols;
    for (int c = n - 1; c >= 0; --c)
      if ((pivots >> c) & 1) cols.push_back(c);
    std::vector<Codeword> free_masks;
    int free_bits = 0;
    for (int c : cols) {
      const Codeword below = (Codeword{1} << c) - 1;
      free_masks.push_back(below & ~pivots);
      free_bits += std::popcount(free_masks.back());
    }
    std::vector<Codeword> basis(cols.size());
    for (Codeword fill = 0; fill < (Codeword{1} << free_bits); ++fill) {
      Codeword rest = fill;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        Codeword row = Codeword{1} << cols[i];
        for (Codeword m = free_masks[i]; m; m &= m - 1) {
          if (rest & 1) row |= m & -m;
          rest >>= 1;
        }
        basis[i] = row;
      }
      f(basis);
    }
  }
}

int min_linear_dim(int n, int R, bool exhaustive) {
  check_n(n);
  if (R < 0) throw InvalidArgument("R must be nonnegative");
  if (!exhaustive) return linear_dim_formula(n, R);
  int best = n + 1;
  for_each_subspace(n, [&](const std::vector<Codeword>& basis) {
    if (static_cast<int>(basis.size()) >= best) return;
    if (covers(span(basis, n).span, R)) best = static_cast<int>(basis.size());
  });
  return best;
}

}  // namespace asymcover
