#pragma once

#include <span>
#include <vector>

#include "pairsuite/pair_metric.hpp"
#include "pairsuite/polynomial.hpp"
#include "pairsuite/random.hpp"

namespace pairsuite {

/// RS[n, k] over F_q evaluated at 1, gamma, ..., gamma^{n-1}, where gamma is
/// the field's primitive element. Requires 1 <= k <= n <= q - 1.
class CodeSpec {
 public:
  CodeSpec(FieldPtr field, std::size_t n, std::size_t k);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return k_; }
  Elem primitive() const noexcept { return field_->primitive(); }
  /// gamma^i
  Elem point(std::size_t i) const noexcept { return field_->exp(i); }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
};

/// Message coefficients (ascending degree) to a polynomial; at most k of them.
Polynomial message_polynomial(const CodeSpec& spec, std::span<const Elem> coeffs);

/// (f(1), f(gamma), ..., f(gamma^{n-1})). Throws kDegreeTooLarge if deg f >= k.
Word rs_encode(const CodeSpec& spec, const Polynomial& f);

/// 2 x (n-1) array; column i is (x_i, x_{i+1}) for i = 0..n-2. This is the
/// pair read vector without its wraparound pair.
struct FoldedWord {
  std::vector<Elem> top;
  std::vector<Elem> bottom;

  std::size_t columns() const noexcept { return top.size(); }
};

FoldedWord fold2(const Word& x);
Word unfold(const FoldedWord& folded, FieldPtr field);
/// Number of differing columns.
std::size_t hamming_distance(const FoldedWord& a, const FoldedWord& b);

struct Witness {
  Polynomial message;
  Word codeword;
};

/// f = prod_{i=0}^{k-2} (x - gamma^i): Hamming weight n-k+1 and pair weight
/// n-k+2, the minimum. Requires 2 <= k < n.
Witness min_pair_distance_witness(const CodeSpec& spec);

/// Minimum pair weight over all nonzero messages; guarded by q^k <= 2^20.
std::size_t min_pair_distance_exhaustive(const CodeSpec& spec);

/// Visits every message polynomial of degree < k (q^k of them, including
/// zero) in increasing order of the base-q integer sum_i c_i q^i.
void for_each_message(const CodeSpec& spec, const std::function<void(const Polynomial&)>& visit);

enum class ErrorPattern {
  kSpread,  // as many isolated runs as the budget allows
  kBurst,   // a single run
};

/// Adds a random error e with wt_P(e) = t exactly (t >= 2). The error has r
/// pairwise separated cyclic runs covering h positions with h + r = t; error
/// symbols are uniform over F_q^*. Budget 1 cannot be realized by any error
/// and leaves the word unchanged. Requires t <= n.
Word inject_pair_errors(const Word& x, std::size_t budget, Rng& rng, ErrorPattern pattern = ErrorPattern::kSpread);

}  // namespace pairsuite
