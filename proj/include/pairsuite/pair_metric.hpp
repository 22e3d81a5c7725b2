#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pairsuite/galois.hpp"

namespace pairsuite {

using BigInt = boost::multiprecision::cpp_int;

/// Length-n vector over F_q, n >= 2.
class Word {
 public:
  Word(FieldPtr field, std::vector<Elem> symbols);
  static Word zeros(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  Elem operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Elem> symbols() const noexcept { return symbols_; }

  friend Word operator+(const Word& a, const Word& b);
  friend Word operator-(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.field_->same_as(*b.field_) && a.symbols_ == b.symbols_;
  }

 private:
  FieldPtr field_;
  std::vector<Elem> symbols_;
};

using SymbolPair = std::pair<Elem, Elem>;
/// [(x_0,x_1), (x_1,x_2), ..., (x_{n-1},x_0)]
using PairView = std::vector<SymbolPair>;

PairView pair_read(const Word& x);

std::size_t hamming_distance(const Word& x, const Word& y);
std::size_t hamming_weight(const Word& x);
std::size_t pair_distance(const Word& x, const Word& y);
std::size_t pair_weight(const Word& x);

/// Unchecked kernels on raw symbol spans of equal length >= 2.
std::size_t pair_distance(std::span<const Elem> x, std::span<const Elem> y) noexcept;
std::size_t pair_weight(std::span<const Elem> x) noexcept;

/// Rotation left by `shift` positions.
Word cyclic_shift(const Word& x, std::size_t shift);

struct RunProfile {
  std::size_t weight;  // Hamming weight
  std::size_t runs;    // maximal cyclic runs of nonzero coordinates
};

/// For 0 < weight < n, pair_weight(x) == weight + runs.
RunProfile run_profile(const Word& x);

/// Number of binary patterns of length n, weight l and w maximal cyclic runs:
/// (n / w) C(l-1, w-1) C(n-l-1, w-1). Requires n >= 2, 1 <= w <= l <= n-1.
BigInt runs_count(std::size_t n, std::size_t l, std::size_t w);

enum class BallCorrection {
  kFullWeight,  // adds the (q-1)^n words of full Hamming weight once r >= n
  kNone,        // the bare run-counting sum; only for fault-injection fixtures
};

/// |B_P(x, r)| for any center x, 0 <= r <= n.
BigInt ball_size_exact(std::size_t n, std::uint64_t q, std::size_t r,
                       BallCorrection correction = BallCorrection::kFullWeight);

/// log_q |B_P(x, floor(delta n))| evaluated in the log domain (log-gamma
/// binomials, max-term log-sum-exp). Usable for n far beyond the exact path.
double ball_size_log(std::size_t n, std::uint64_t q, double delta);

/// Largest q^n accepted by the enumeration oracles.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

/// Calls `visit` with every word at pair distance <= r from `center`,
/// each exactly once, in lexicographic order of coordinates. Depth-first with
/// pruning on the partial pair distance. Guarded by q^n <= 2^24.
void for_each_in_ball(const Field& field, std::span<const Elem> center, std::size_t r,
                      const std::function<void(std::span<const Elem>)>& visit);

std::vector<Word> ball_enumerate(const Word& center, std::size_t r);

/// q^n, saturating at UINT64_MAX.
std::uint64_t space_size(std::uint64_t q, std::size_t n) noexcept;

}  // namespace pairsuite
