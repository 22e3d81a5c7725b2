#include "pairsuite/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "pairsuite/bounds.hpp"
#include "pairsuite/random.hpp"

namespace pairsuite {

namespace {

constexpr std::uint64_t kMaxSpace = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxWork = std::uint64_t{1} << 32;

std::uint64_t word_index(std::span<const Elem> w, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = w.size(); i-- > 0;) idx = idx * q + w[i].value;
  return idx;
}

// Calls visit(word) for every word of F_q^n in odometer order.
template <typename Fn>
void for_each_word(std::uint32_t q, std::size_t n, Fn&& visit) {
  std::vector<Elem> w(n, Elem{0});
  while (true) {
    visit(std::span<const Elem>(w));
    std::size_t i = 0;
    while (i < n && w[i].value + 1 == q) w[i++] = Elem{0};
    if (i == n) return;
    w[i] = Elem{w[i].value + 1};
  }
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

unsigned worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PAIRSUITE_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) return std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

std::uint64_t random_code_size(std::uint64_t q, std::size_t n, double rate) {
  if (!(rate > 0.0)) return 1;
  const double exponent = rate * static_cast<double>(n);
  if (exponent * std::log2(static_cast<double>(q)) > 20.0 + 1e-9)
    fail(ErrorCode::kSizeTooLarge, "q^{Rn} exceeds 2^20");
  const double size = std::pow(static_cast<double>(q), exponent);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(size - 1e-9)));
}

RandomCode sample_random_code(std::uint64_t q, std::size_t n, double rate, std::uint64_t seed) {
  if (n < 2) fail(ErrorCode::kLengthTooShort, "codes need length >= 2");
  RandomCode code;
  code.field = Field::of_order(q);
  code.length = n;
  code.rate = rate;
  code.seed = seed;
  const std::uint64_t m = random_code_size(q, n, rate);
  Rng rng(seed);
  code.symbols.resize(m * n);
  for (Elem& s : code.symbols) s = Elem{static_cast<std::uint32_t>(uniform_below(rng, q))};
  return code;
}

ListSizeResult max_list_size(const RandomCode& code, std::size_t radius, const ListSearch& mode) {
  const std::uint64_t q = code.field->order();
  const std::size_t n = code.length;
  const std::size_t m = code.size();

  if (const auto* sampled = std::get_if<Sampled>(&mode)) {
    Rng rng(sampled->seed);
    std::vector<Elem> y(n);
    ListSizeResult out{0, false};
    for (std::size_t c = 0; c < sampled->centers; ++c) {
      for (Elem& s : y) s = Elem{static_cast<std::uint32_t>(uniform_below(rng, q))};
      std::size_t hits = 0;
      for (std::size_t i = 0; i < m; ++i) hits += pair_distance(code.word(i), y) <= radius;
      out.max_list = std::max(out.max_list, hits);
    }
    return out;
  }

  const std::uint64_t space = space_size(q, n);
  if (space > kMaxSpace) fail(ErrorCode::kSearchSpaceTooLarge, "exhaustive audit needs q^n <= 2^20");
  const BigInt ball = ball_size_exact(n, q, std::min(radius, n));
  if (BigInt(m) * ball > kMaxWork) fail(ErrorCode::kSearchSpaceTooLarge, "|C| * |ball| exceeds 2^32");

  // d_P is symmetric, so counting each codeword's ball at its members gives
  // |B_P(y, r) ∩ C| at every y.
  std::vector<std::uint32_t> hits(space, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for_each_in_ball(*code.field, code.word(i), std::min(radius, n),
                     [&](std::span<const Elem> w) { ++hits[word_index(w, q)]; });
  }
  return ListSizeResult{*std::max_element(hits.begin(), hits.end()), true};
}

DoubleCount double_count(const RandomCode& code, std::size_t radius) {
  const std::uint64_t q = code.field->order();
  const std::size_t n = code.length;
  const std::size_t m = code.size();
  const std::uint64_t space = space_size(q, n);
  if (space > kMaxSpace || space * m > (std::uint64_t{1} << 28))
    fail(ErrorCode::kSearchSpaceTooLarge, "double count needs q^n <= 2^20 and q^n |C| <= 2^28");

  std::uint64_t pairs = 0;
  for_each_word(static_cast<std::uint32_t>(q), n, [&](std::span<const Elem> v) {
    for (std::size_t i = 0; i < m; ++i) pairs += pair_distance(code.word(i), v) <= radius;
  });
  return DoubleCount{BigInt(pairs), BigInt(m) * ball_size_exact(n, q, std::min(radius, n))};
}

bool double_counting_check(const RandomCode& code, std::size_t radius) { return double_count(code, radius).equal(); }

std::size_t list_size_threshold(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail(ErrorCode::kDomainError, "epsilon must lie in (0, 1)");
  return static_cast<std::size_t>(std::ceil(4.0 / epsilon - 1e-9)) - 1;
}

ExperimentReport gv_list_experiment(std::uint64_t q, std::size_t n, double tau, double epsilon, std::size_t trials,
                                    std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  if (!(tau >= 0.0 && tau <= 1.0)) fail(ErrorCode::kDomainError, "tau must lie in [0, 1]");

  ExperimentReport rep;
  rep.q = q;
  rep.n = n;
  rep.tau = tau;
  rep.epsilon = epsilon;
  rep.trials = trials;
  rep.seed = seed;
  rep.seed_scheme = "trial i uses splitmix64(splitmix64(seed) ^ i); its sampled audit uses the same map applied to (trial seed, 1)";
  rep.list_threshold = list_size_threshold(epsilon);
  rep.kappa = kappa_sp(q, tau).value;
  rep.rate = std::max(0.0, 1.0 - rep.kappa - epsilon);
  rep.code_size = random_code_size(q, n, rep.rate);
  rep.radius = std::min<std::size_t>(n, static_cast<std::size_t>(std::floor(tau * static_cast<double>(n) + 1e-9)));
  const std::uint64_t space = space_size(q, n);
  if (space > kMaxSpace) fail(ErrorCode::kSearchSpaceTooLarge, "exhaustive audit needs q^n <= 2^20");
  rep.sample_centers = static_cast<std::size_t>(std::min<std::uint64_t>(space, 256));

  rep.per_trial.resize(trials);
  parallel_for(trials, [&](std::size_t i) {
    TrialRecord& t = rep.per_trial[i];
    t.seed = derive_seed(seed, i);
    const RandomCode code = sample_random_code(q, n, rep.rate, t.seed);
    t.max_list = max_list_size(code, rep.radius).max_list;
    t.sampled_max_list = max_list_size(code, rep.radius, Sampled{rep.sample_centers, derive_seed(t.seed, 1)}).max_list;
  });

  const auto within = std::count_if(rep.per_trial.begin(), rep.per_trial.end(),
                                    [&](const TrialRecord& t) { return t.max_list <= rep.list_threshold; });
  rep.fraction_within_threshold = trials == 0 ? 1.0 : static_cast<double>(within) / static_cast<double>(trials);
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace pairsuite
