#pragma once

#include <cstdint>
#include <vector>

#include "pairsuite/pair_metric.hpp"

namespace pairsuite {

/// H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 = 0.
double entropy_q(std::uint64_t q, double x);

/// Exponent of the pair-ball volume,
///   kappa(delta) = max over 0 <= theta/2 <= beta <= theta <= delta of
///     beta H_q((2 beta - theta)/beta) + (1 - beta) H_q((theta - beta)/(1 - beta)).
/// beta is the relative Hamming weight, theta the relative pair weight.
double kappa_objective(std::uint64_t q, double beta, double theta);

struct KappaResult {
  double delta = 0.0;
  double value = 0.0;
  double beta = 0.0;
  double theta = 0.0;
  double tolerance = 0.0;  // final grid spacing of the refinement
};

inline constexpr double kKappaDefaultTol = 1e-9;

/// Global maximum of kappa_objective over the triangle. A coarse grid at
/// spacing 1e-3 is followed by local refinements shrinking the spacing by 10
/// per round until it drops below `tol`. Ties break towards the
/// lexicographically smaller (beta, theta).
KappaResult kappa_sp(std::uint64_t q, double delta, double tol = kKappaDefaultTol);

/// max(0, 1 - kappa(delta)).
double gv_rate_pair(std::uint64_t q, double delta);
/// max(0, 1 - H_q(delta)); zero for delta >= 1 - 1/q.
double gv_rate_hamming(std::uint64_t q, double delta);
double singleton_rate(double delta);

/// M <= q^{n - d_P + 2}, for 2 <= d_P <= n.
bool singleton_size_check(std::size_t n, const BigInt& size, std::size_t pair_distance, std::uint64_t q);

/// Largest admissible relative list-decoding radius at rate R for
/// polynomial list size: the tau solving R = 1 - kappa(tau), by bisection.
/// Throws kNoSolution unless 0 < R < 1.
double list_radius_upper(std::uint64_t q, double rate, double tol = 1e-7);

/// (q^2-1)/q^2 (1 - sqrt(1 - q^2 delta / (q^2 - 1))), for
/// 0 <= delta <= (q^2-1)/q^2.
double johnson_radius(std::uint64_t q, double delta);
double johnson_delta_max(std::uint64_t q);
/// 2 (q^2 - 1) n d.
BigInt johnson_list_size(std::uint64_t q, std::size_t n, std::size_t d);

struct BoundRow {
  double delta;
  double gv_pair;
  double gv_hamming;
  double singleton;
  double johnson_tau;
};

struct BoundReport {
  std::uint64_t q = 2;
  BigInt johnson_list_coefficient;  // 2 (q^2 - 1), the factor of n d
  std::vector<BoundRow> rows;
};

/// One row per grid point; the grid must be strictly increasing inside
/// [0, 1]. Johnson radii are evaluated at min(delta, johnson_delta_max(q)).
BoundReport bound_report(std::uint64_t q, const std::vector<double>& grid);

/// {start, start + step, ...} up to and including stop (within 1e-12).
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace pairsuite
