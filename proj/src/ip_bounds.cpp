#include "asymcover/ip_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace asymcover {

CoveringIP::CoveringIP(int n, int R, std::vector<std::int64_t> objective)
    : n_(n), R_(R), objective_(std::move(objective)) {}

namespace {

void check_range(int n, int R) {
  if (R < 1 || R > n) throw InvalidArgument("covering IP needs 1 <= R <= n");
  if (n > kMaxIPDimension) throw CapExceeded("covering IP: n exceeds " + std::to_string(kMaxIPDimension));
}

}  // namespace

CoveringIP CoveringIP::plus(int n, int R) {
  check_range(n, R);
  return CoveringIP(n, R, std::vector<std::int64_t>(n + 1, 1));
}

CoveringIP CoveringIP::phi(int n, int R) {
  check_range(n, R);
  std::vector<std::int64_t> c(n + 1);
  for (int l = 0; l <= n; ++l) c[l] = n - l;
  return CoveringIP(n, R, std::move(c));
}

std::int64_t CoveringIP::coefficient(int l, int m) const {
  if (m < l || m > l + R_ || m > n_) return 0;
  return static_cast<std::int64_t>(binomial(m, m - l));
}

std::int64_t CoveringIP::rhs(int l) const { return static_cast<std::int64_t>(binomial(n_, l)); }

bool CoveringIP::feasible(const LevelProfile& a) const {
  if (static_cast<int>(a.counts.size()) != n_ + 1) return false;
  for (int l = 0; l <= n_; ++l) {
    if (a.counts[l] < 0 || a.counts[l] > upper(l)) return false;
    std::int64_t lhs = 0;
    for (int m = l; m <= std::min(n_, l + R_); ++m) lhs += coefficient(l, m) * a.counts[m];
    if (lhs < rhs(l)) return false;
  }
  return true;
}

std::int64_t CoveringIP::value(const LevelProfile& a) const {
  std::int64_t v = 0;
  for (int l = 0; l <= n_; ++l) v += objective_[l] * a.counts[l];
  return v;
}

std::string CoveringIP::to_csv() const {
  std::ostringstream out;
  for (int m = 0; m <= n_; ++m) out << "a" << m << ',';
  out << "rhs\n";
  for (int l = 0; l <= n_; ++l) {
    for (int m = 0; m <= n_; ++m) out << coefficient(l, m) << ',';
    out << rhs(l) << '\n';
  }
  return out.str();
}

namespace {

// Dual-feasible prices. Column m touches rows max(0,m-R)..m with total
// coefficient mass B_m; pricing each of those rows at c_m / B_m keeps the
// column's reduced cost nonnegative. A row takes the cheapest price among
// its still-free columns.
class DualPrices {
 public:
  explicit DualPrices(const CoveringIP& ip) : ip_(ip), ratio_(ip.n() + 1) {
    for (int m = 0; m <= ip.n(); ++m) {
      std::int64_t mass = 0;
      for (int r = std::max(0, m - ip.R()); r <= m; ++r) mass += ip.coefficient(r, m);
      ratio_[m] = Rational(ip.objective(m), mass);
    }
  }

  // price of row r when columns 0..free_top are free
  const Rational& price(int r, int free_top) const {
    const Rational* best = &ratio_[r];
    for (int m = r + 1; m <= std::min(free_top, r + ip_.R()); ++m)
      if (ratio_[m] < *best) best = &ratio_[m];
    return *best;
  }

  const Rational& ratio(int m) const { return ratio_[m]; }

 private:
  const CoveringIP& ip_;
  std::vector<Rational> ratio_;
};

// Dual of the residual covering LP over free columns 0..f:
//
//     max sum_r d_r y_r   s.t.  sum_r A(r,m) y_r <= c_m  (0 <= m <= f),  y >= 0.
//
// y = 0 is feasible, so a plain primal simplex from the slack basis works.
// The returned y is repaired to be exactly feasible (clamped, then scaled),
// so d.y is an admissible bound for any d, not only the one solved for.
class PackingDual {
 public:
  PackingDual(const CoveringIP& ip) : ip_(ip) {}

  // demand[r] for r = 0..f; returns y of length f+1.
  const std::vector<double>& solve(int f, const std::vector<std::int64_t>& demand) {
    const int rows = f + 1, cols = 2 * (f + 1);
    const int width = cols + 1;
    tab_.assign(static_cast<std::size_t>(rows + 1) * width, 0.0);
    auto at = [&](int i, int j) -> double& { return tab_[static_cast<std::size_t>(i) * width + j]; };
    basis_.assign(rows, 0);
    for (int m = 0; m <= f; ++m) {
      for (int r = std::max(0, m - ip_.R()); r <= m; ++r) at(m, r) = static_cast<double>(ip_.coefficient(r, m));
      at(m, f + 1 + m) = 1.0;
      at(m, cols) = static_cast<double>(ip_.objective(m));
      basis_[m] = f + 1 + m;
    }
    // objective row holds -d
    for (int r = 0; r <= f; ++r) at(rows, r) = -static_cast<double>(std::max<std::int64_t>(0, demand[r]));

    constexpr double eps = 1e-11;
    for (int iter = 0; iter < 50 * cols; ++iter) {
      const bool bland = iter > 10 * cols;
      int enter = -1;
      double most = -eps;
      for (int j = 0; j < cols; ++j) {
        if (at(rows, j) < most) {
          enter = j;
          if (bland) break;
          most = at(rows, j);
        }
      }
      if (enter < 0) break;
      int leave = -1;
      double ratio = 0;
      for (int i = 0; i < rows; ++i) {
        const double a = at(i, enter);
        if (a > eps) {
          const double q = at(i, cols) / a;
          if (leave < 0 || q < ratio - 1e-15 || (q <= ratio + 1e-15 && basis_[i] < basis_[leave])) {
            leave = i;
            ratio = q;
          }
        }
      }
      if (leave < 0) break;  // cannot happen: each y_r has a positive coefficient in column r
      const double p = at(leave, enter);
      for (int j = 0; j <= cols; ++j) at(leave, j) /= p;
      for (int i = 0; i <= rows; ++i) {
        if (i == leave) continue;
        const double factor = at(i, enter);
        if (factor == 0.0) continue;
        for (int j = 0; j <= cols; ++j) at(i, j) -= factor * at(leave, j);
      }
      basis_[leave] = enter;
    }
    y_.assign(f + 1, 0.0);
    for (int i = 0; i < rows; ++i)
      if (basis_[i] <= f) y_[basis_[i]] = std::max(0.0, at(i, cols));
    repair(f);
    return y_;
  }

 private:
  void repair(int f) {
    double scale = 1.0;
    for (int m = 0; m <= f; ++m) {
      double load = 0;
      const int lo = std::max(0, m - ip_.R());
      for (int r = lo; r <= m; ++r) load += static_cast<double>(ip_.coefficient(r, m)) * y_[r];
      const double c = static_cast<double>(ip_.objective(m));
      if (c == 0.0) {
        for (int r = lo; r <= m; ++r) y_[r] = 0.0;
      } else if (load > c) {
        scale = std::min(scale, c / load);
      }
    }
    // leave a little room so that float rounding never makes y infeasible
    scale *= 1.0 - 1e-12;
    for (double& v : y_) v *= scale;
  }

  const CoveringIP& ip_;
  std::vector<double> tab_;
  std::vector<int> basis_;
  std::vector<double> y_;
};

class Solver {
 public:
  Solver(const CoveringIP& ip, std::uint64_t node_limit)
      : ip_(ip), n_(ip.n()), R_(ip.R()), node_limit_(node_limit), a_(n_ + 1, 0), cov_(n_ + 1, 0), dual_(ip) {}

  IPSolution run() {
    dive();
    dfs(n_, 0);
    return IPSolution{best_, best_profile_, nodes_};
  }

 private:
  std::int64_t demand(int r) const { return ip_.rhs(r) - cov_[r]; }

  // LP bound for levels 0..f with the current cov_; fills y (length f+1)
  long double node_bound(int f, std::vector<double>& y) {
    std::vector<std::int64_t> d(f + 1);
    for (int r = 0; r <= f; ++r) d[r] = demand(r);
    y = dual_.solve(f, d);
    long double s = 0;
    for (int r = 0; r <= f; ++r)
      if (d[r] > 0) s += static_cast<long double>(d[r]) * y[r];
    return s;
  }

  // cost of a_l = v plus the bound y gives on levels below l
  long double child_bound(int l, std::int64_t v, const std::vector<double>& y) const {
    long double s = static_cast<long double>(ip_.objective(l) * v);
    for (int r = 0; r < l; ++r) {
      const std::int64_t d = demand(r) - ip_.coefficient(r, l) * v;
      if (d > 0) s += static_cast<long double>(d) * y[r];
    }
    return s;
  }

  // smallest minimizer of the convex function v -> child_bound(l, v, y) on [lo, hi]
  std::int64_t argmin(int l, std::int64_t lo, std::int64_t hi, const std::vector<double>& y) const {
    while (lo < hi) {
      const std::int64_t m = lo + (hi - lo) / 2;
      if (child_bound(l, m + 1, y) < child_bound(l, m, y))
        lo = m + 1;
      else
        hi = m;
    }
    return lo;
  }

  std::pair<std::int64_t, std::int64_t> value_range(int l) const {
    const std::int64_t lo = std::max<std::int64_t>(0, demand(l));
    // beyond hi, extra words at level l cannot help any row they touch
    std::int64_t hi = lo;
    for (int r = std::max(0, l - R_); r < l; ++r) {
      const std::int64_t d = demand(r);
      if (d > 0) {
        const std::int64_t c = ip_.coefficient(r, l);
        hi = std::max(hi, (d + c - 1) / c);
      }
    }
    return {lo, std::min(hi, ip_.upper(l))};
  }

  void place(int l, std::int64_t v, int sign) {
    for (int r = std::max(0, l - R_); r <= l; ++r) cov_[r] += sign * ip_.coefficient(r, l) * v;
  }

  // incumbent: one top-down pass taking, per level, the value with the smallest bound
  void dive() {
    std::int64_t cost = 0;
    std::vector<std::int64_t> picked(n_ + 1, 0);
    std::vector<double> y;
    for (int l = n_; l >= 0; --l) {
      node_bound(l, y);
      const auto [lo, hi] = value_range(l);
      const std::int64_t best_v = argmin(l, lo, hi, y);
      picked[l] = best_v;
      place(l, best_v, +1);
      cost += ip_.objective(l) * best_v;
    }
    for (int l = 0; l <= n_; ++l) place(l, picked[l], -1);
    best_ = cost;
    best_profile_.counts = picked;
  }

  bool prunable(long double bound) const {
    const long double slack = 1e-9L * std::fabs(bound) + 1e-7L;
    return bound - slack > static_cast<long double>(best_ - 1);
  }

  void dfs(int l, std::int64_t cost) {
    if (++nodes_ > node_limit_) throw BudgetExceeded("covering IP: node limit exceeded");
    if (l < 0) {
      if (cost < best_) {
        best_ = cost;
        best_profile_.counts = a_;
      }
      return;
    }
    std::vector<double> y;
    if (prunable(cost + node_bound(l, y))) return;
    const auto [lo, hi] = value_range(l);
    // child_bound is convex in v, so the values worth trying form an interval
    const std::int64_t mid = argmin(l, lo, hi, y);
    auto keep = [&](std::int64_t v) { return !prunable(cost + child_bound(l, v, y)); };
    if (!keep(mid)) return;
    std::int64_t first = lo, last = mid;
    for (std::int64_t b = mid; first < b;) {
      const std::int64_t m = first + (b - first) / 2;
      if (keep(m))
        b = m;
      else
        first = m + 1;
    }
    for (std::int64_t b = hi; last < b;) {
      const std::int64_t m = b - (b - last) / 2;
      if (keep(m))
        last = m;
      else
        b = m - 1;
    }
    for (std::int64_t v = first; v <= last; ++v) {
      if (cost + ip_.objective(l) * v >= best_) break;
      a_[l] = v;
      place(l, v, +1);
      dfs(l - 1, cost + ip_.objective(l) * v);
      place(l, v, -1);
    }
    a_[l] = 0;
  }

  const CoveringIP& ip_;
  const int n_;
  const int R_;
  const std::uint64_t node_limit_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> cov_;
  PackingDual dual_;
  std::int64_t best_ = 0;
  LevelProfile best_profile_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IPSolution solve(const CoveringIP& ip, std::uint64_t node_limit) { return Solver(ip, node_limit).run(); }

IPSolution ip_plus(int n, int R, std::uint64_t node_limit) { return solve(CoveringIP::plus(n, R), node_limit); }

IPSolution ip_phi(int n, int R, std::uint64_t node_limit) { return solve(CoveringIP::phi(n, R), node_limit); }

std::optional<Rational> lp_relax_lower(const CoveringIP& ip, const std::vector<std::int64_t>& fixed_top) {
  const int n = ip.n();
  if (static_cast<int>(fixed_top.size()) > n + 1) throw InvalidArgument("lp_relax_lower: prefix longer than n+1");
  const int first_free = n - static_cast<int>(fixed_top.size());  // highest free level, -1 if none
  std::vector<std::int64_t> cov(n + 1, 0);
  Rational bound = 0;
  for (std::size_t k = 0; k < fixed_top.size(); ++k) {
    const int m = n - static_cast<int>(k);
    bound += Rational(ip.objective(m) * fixed_top[k]);
    for (int r = std::max(0, m - ip.R()); r <= m; ++r) cov[r] += ip.coefficient(r, m) * fixed_top[k];
  }
  for (int r = first_free + 1; r <= n; ++r)
    if (cov[r] < ip.rhs(r)) return std::nullopt;
  if (first_free < 0) return bound;
  std::vector<std::int64_t> demand(first_free + 1);
  for (int r = 0; r <= first_free; ++r) demand[r] = std::max<std::int64_t>(0, ip.rhs(r) - cov[r]);

  const DualPrices prices(ip);
  Rational split = 0;
  for (int r = 0; r <= first_free; ++r) split += Rational(demand[r]) * prices.price(r, first_free);

  // the float simplex dual, made exactly feasible in rational arithmetic
  PackingDual dual(ip);
  const auto& yf = dual.solve(first_free, demand);
  std::vector<Rational> y(yf.begin(), yf.end());
  Rational scale = 1;
  for (int m = 0; m <= first_free; ++m) {
    const int lo = std::max(0, m - ip.R());
    Rational load = 0;
    for (int r = lo; r <= m; ++r) load += Rational(ip.coefficient(r, m)) * y[r];
    if (ip.objective(m) == 0) {
      for (int r = lo; r <= m; ++r) y[r] = 0;
    } else if (load > ip.objective(m)) {
      scale = std::min(scale, Rational(ip.objective(m)) / load);
    }
  }
  Rational simplex = 0;
  for (int r = 0; r <= first_free; ++r) simplex += Rational(demand[r]) * y[r];
  simplex *= scale;
  return bound + std::max(split, simplex);
}

}  // namespace asymcover
