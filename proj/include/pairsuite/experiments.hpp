#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pairsuite/galois.hpp"
#include "pairsuite/pair_metric.hpp"

namespace pairsuite {

/// M = ceil(q^{Rn}) words drawn uniformly from F_q^n with replacement.
struct RandomCode {
  FieldPtr field;
  std::size_t length = 0;
  double rate = 0.0;
  std::uint64_t seed = 0;
  std::vector<Elem> symbols;  // M * length, row-major

  std::size_t size() const noexcept { return length == 0 ? 0 : symbols.size() / length; }
  std::span<const Elem> word(std::size_t i) const noexcept { return {symbols.data() + i * length, length}; }
};

/// Code size ceil(q^{Rn}) for a rate R >= 0; kSizeTooLarge above 2^20.
std::uint64_t random_code_size(std::uint64_t q, std::size_t n, double rate);

RandomCode sample_random_code(std::uint64_t q, std::size_t n, double rate, std::uint64_t seed);

struct Exhaustive {};
struct Sampled {
  std::size_t centers;
  std::uint64_t seed;
};
using ListSearch = std::variant<Exhaustive, Sampled>;

struct ListSizeResult {
  std::size_t max_list = 0;
  bool exact = true;  // false in sampled mode: a lower bound
};

/// max over centers y of |B_P(y, radius) ∩ C|, counting repeated codewords
/// with multiplicity. Exhaustive mode requires q^n <= 2^20.
ListSizeResult max_list_size(const RandomCode& code, std::size_t radius, const ListSearch& mode = Exhaustive{});

/// Two counts of A = {(c, v) : d_P(c, v) <= r}.
struct DoubleCount {
  BigInt by_centers;    // sum over v in F_q^n of |B_P(v, r) ∩ C|
  BigInt by_codewords;  // |C| * |B_P(., r)|
  bool equal() const { return by_centers == by_codewords; }
};

DoubleCount double_count(const RandomCode& code, std::size_t radius);
bool double_counting_check(const RandomCode& code, std::size_t radius);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t max_list = 0;          // exhaustive
  std::size_t sampled_max_list = 0;  // sampled from `sample_centers` random centers
};

struct ExperimentReport {
  std::uint64_t q = 2;
  std::size_t n = 0;
  double tau = 0.0;
  double epsilon = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string seed_scheme;
  double kappa = 0.0;
  double rate = 0.0;
  std::uint64_t code_size = 0;
  std::size_t radius = 0;          // floor(tau n)
  std::size_t list_threshold = 0;  // ceil(4 / epsilon) - 1
  std::size_t sample_centers = 0;
  std::vector<TrialRecord> per_trial;
  double fraction_within_threshold = 1.0;
  double runtime_seconds = 0.0;  // excluded from reproducibility comparisons
};

/// ceil(4 / epsilon) - 1.
std::size_t list_size_threshold(double epsilon);

/// Samples `trials` codes at rate max(0, 1 - kappa(tau) - epsilon) and audits
/// each exhaustively (plus a sampled-centre cross-check). Reports the
/// empirical distribution only; no asymptotic claim is checked.
ExperimentReport gv_list_experiment(std::uint64_t q, std::size_t n, double tau, double epsilon, std::size_t trials,
                                    std::uint64_t seed);

/// Worker count: PAIRSUITE_THREADS if set and positive, else hardware
/// concurrency, capped by the env value when both are present.
unsigned worker_count();

}  // namespace pairsuite
