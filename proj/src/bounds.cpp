#include "pairsuite/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace pairsuite {

double entropy_q(std::uint64_t q, double x) {
  if (q < 2) fail(ErrorCode::kDomainError, "entropy needs q >= 2");
  if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::kDomainError, "entropy argument outside [0, 1]");
  const double lq = std::log(static_cast<double>(q));
  double h = x * std::log(static_cast<double>(q - 1)) / lq;
  if (x > 0.0) h -= x * std::log(x) / lq;
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x) / lq;
  return h;
}

namespace {

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double kappa_objective(std::uint64_t q, double beta, double theta) {
  double v = 0.0;
  if (beta > 0.0) v += beta * entropy_q(q, clamp_unit((2.0 * beta - theta) / beta));
  if (beta < 1.0) v += (1.0 - beta) * entropy_q(q, clamp_unit((theta - beta) / (1.0 - beta)));
  return v;
}

namespace {

struct Best {
  double value = -1.0;
  double beta = 0.0;
  double theta = 0.0;

  void offer(double v, double b, double t) {
    if (v > value || (v == value && (b < beta || (b == beta && t < theta)))) {
      value = v;
      beta = b;
      theta = t;
    }
  }
};

// Points lo, lo + h, ... strictly below hi, then hi itself.
template <typename Fn>
void sweep(double lo, double hi, double h, Fn&& fn) {
  if (hi < lo) return;
  const auto steps = static_cast<long long>(std::floor((hi - lo) / h));
  for (long long i = 0; i <= steps; ++i) {
    const double x = lo + static_cast<double>(i) * h;
    if (x >= hi) break;
    fn(x);
  }
  fn(hi);
}

}  // namespace

KappaResult kappa_sp(std::uint64_t q, double delta, double tol) {
  if (q < 2) fail(ErrorCode::kDomainError, "kappa needs q >= 2");
  if (!(delta >= 0.0 && delta <= 1.0)) fail(ErrorCode::kDomainError, "delta outside [0, 1]");
  if (!(tol >= 1e-9 * (1 - 1e-12))) fail(ErrorCode::kDomainError, "kappa tolerance must be >= 1e-9");

  Best best;
  double h = 1e-3;
  sweep(0.0, delta, h, [&](double theta) {
    sweep(theta / 2.0, theta, h, [&](double beta) { best.offer(kappa_objective(q, beta, theta), beta, theta); });
  });

  while (h >= tol) {
    const double s = h / 10.0;
    const Best centre = best;
    const double t_lo = std::max(0.0, centre.theta - h);
    const double t_hi = std::min(delta, centre.theta + h);
    sweep(t_lo, t_hi, s, [&](double theta) {
      const double b_lo = std::max(theta / 2.0, centre.beta - h);
      const double b_hi = std::min(theta, centre.beta + h);
      sweep(b_lo, b_hi, s, [&](double beta) { best.offer(kappa_objective(q, beta, theta), beta, theta); });
    });
    h = s;
  }

  return KappaResult{delta, std::max(0.0, best.value), best.beta, best.theta, h};
}

double gv_rate_pair(std::uint64_t q, double delta) { return std::clamp(1.0 - kappa_sp(q, delta).value, 0.0, 1.0); }

double gv_rate_hamming(std::uint64_t q, double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) fail(ErrorCode::kDomainError, "delta outside [0, 1]");
  const double edge = 1.0 - 1.0 / static_cast<double>(q);
  if (delta >= edge) return 0.0;
  return std::clamp(1.0 - entropy_q(q, delta), 0.0, 1.0);
}

double singleton_rate(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) fail(ErrorCode::kDomainError, "delta outside [0, 1]");
  return 1.0 - delta;
}

bool singleton_size_check(std::size_t n, const BigInt& size, std::size_t pair_distance, std::uint64_t q) {
  if (pair_distance < 2 || pair_distance > n) fail(ErrorCode::kDomainError, "Singleton check needs 2 <= d_P <= n");
  const BigInt cap = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - pair_distance + 2));
  return size <= cap;
}

double list_radius_upper(std::uint64_t q, double rate, double tol) {
  if (!(rate > 0.0 && rate < 1.0)) fail(ErrorCode::kNoSolution, "rate must lie strictly inside (0, 1)");
  if (!(tol > 0.0)) fail(ErrorCode::kDomainError, "tolerance must be positive");
  const double target = 1.0 - rate;
  double lo = 0.0, hi = 1.0;
  if (kappa_sp(q, hi).value < target) fail(ErrorCode::kNoSolution, "rate below attainable range");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (kappa_sp(q, mid).value >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double johnson_delta_max(std::uint64_t q) {
  const double q2 = static_cast<double>(q) * static_cast<double>(q);
  return (q2 - 1.0) / q2;
}

double johnson_radius(std::uint64_t q, double delta) {
  if (q < 2) fail(ErrorCode::kDomainError, "Johnson radius needs q >= 2");
  const double q2 = static_cast<double>(q) * static_cast<double>(q);
  const double top = (q2 - 1.0) / q2;
  const double radicand = 1.0 - q2 * delta / (q2 - 1.0);
  if (delta < 0.0 || radicand < -1e-12) fail(ErrorCode::kDomainError, "delta outside [0, (q^2-1)/q^2]");
  const double tau = top * (1.0 - std::sqrt(std::max(0.0, radicand)));
  return std::clamp(tau, 0.0, top);
}

BigInt johnson_list_size(std::uint64_t q, std::size_t n, std::size_t d) {
  if (d < 1 || d > n) fail(ErrorCode::kDomainError, "Johnson list size needs 1 <= d <= n");
  return 2 * (BigInt(q) * q - 1) * n * d;
}

BoundReport bound_report(std::uint64_t q, const std::vector<double>& grid) {
  if (q < 2) fail(ErrorCode::kDomainError, "bound report needs q >= 2");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) fail(ErrorCode::kDomainError, "grid point outside [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1])) fail(ErrorCode::kDomainError, "grid must be strictly increasing");
  }
  BoundReport out;
  out.q = q;
  out.johnson_list_coefficient = 2 * (BigInt(q) * q - 1);
  for (double delta : grid) {
    out.rows.push_back(BoundRow{delta, gv_rate_pair(q, delta), gv_rate_hamming(q, delta), singleton_rate(delta),
                                johnson_radius(q, std::min(delta, johnson_delta_max(q)))});
  }
  return out;
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) fail(ErrorCode::kDomainError, "grid needs step > 0 and stop >= start");
  std::vector<double> out;
  const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  for (long long i = 0; i <= count; ++i) out.push_back(std::min(stop, start + static_cast<double>(i) * step));
  return out;
}

}  // namespace pairsuite
