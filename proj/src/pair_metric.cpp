#include "pairsuite/pair_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pairsuite {

Word::Word(FieldPtr field, std::vector<Elem> symbols) : field_(std::move(field)), symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) fail(ErrorCode::kLengthTooShort, "words need length >= 2");
  for (Elem s : symbols_) field_->element(s.value);
}

Word Word::zeros(FieldPtr field, std::size_t n) { return Word(std::move(field), std::vector<Elem>(n, Elem{0})); }

namespace {

void require_compatible(const Word& x, const Word& y) {
  x.field()->require_same(*y.field());
  if (x.size() != y.size()) fail(ErrorCode::kLengthMismatch, "words of different length");
}

}  // namespace

Word operator+(const Word& a, const Word& b) {
  require_compatible(a, b);
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field_->add(a[i], b[i]);
  return Word(a.field_, std::move(out));
}

Word operator-(const Word& a, const Word& b) {
  require_compatible(a, b);
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field_->sub(a[i], b[i]);
  return Word(a.field_, std::move(out));
}

PairView pair_read(const Word& x) {
  const std::size_t n = x.size();
  PairView out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(x[i], x[(i + 1) % n]);
  return out;
}

std::size_t pair_distance(std::span<const Elem> x, std::span<const Elem> y) noexcept {
  const std::size_t n = x.size();
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + 1 == n ? 0 : i + 1;
    if (x[i] != y[i] || x[j] != y[j]) ++d;
  }
  return d;
}

std::size_t pair_weight(std::span<const Elem> x) noexcept {
  const std::size_t n = x.size();
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].value != 0 || x[(i + 1) % n].value != 0) ++d;
  }
  return d;
}

std::size_t hamming_distance(const Word& x, const Word& y) {
  require_compatible(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t hamming_weight(const Word& x) {
  return static_cast<std::size_t>(
      std::count_if(x.symbols().begin(), x.symbols().end(), [](Elem s) { return s.value != 0; }));
}

std::size_t pair_distance(const Word& x, const Word& y) {
  require_compatible(x, y);
  return pair_distance(x.symbols(), y.symbols());
}

std::size_t pair_weight(const Word& x) { return pair_weight(x.symbols()); }

Word cyclic_shift(const Word& x, std::size_t shift) {
  const std::size_t n = x.size();
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[(i + shift) % n];
  return Word(x.field(), std::move(out));
}

RunProfile run_profile(const Word& x) {
  const std::size_t n = x.size();
  RunProfile out{hamming_weight(x), 0};
  if (out.weight == n) {
    out.runs = 1;
    return out;
  }
  // a run starts at i when x_i != 0 and x_{i-1} == 0 (cyclically)
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].value != 0 && x[(i + n - 1) % n].value == 0) ++out.runs;
  }
  return out;
}

namespace {

BigInt binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (std::size_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

double log_binomial(double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); }

}  // namespace

BigInt runs_count(std::size_t n, std::size_t l, std::size_t w) {
  if (n < 2 || w < 1 || w > l || l > n - 1) fail(ErrorCode::kDomainError, "runs_count needs 1 <= w <= l <= n-1");
  BigInt num = BigInt(n) * binomial(l - 1, w - 1) * binomial(n - l - 1, w - 1);
  return num / w;
}

BigInt ball_size_exact(std::size_t n, std::uint64_t q, std::size_t r, BallCorrection correction) {
  if (n < 2) fail(ErrorCode::kDomainError, "ball size needs n >= 2");
  if (q < 2) fail(ErrorCode::kDomainError, "ball size needs q >= 2");
  if (r > n) fail(ErrorCode::kDomainError, "radius exceeds length");
  const BigInt units = q - 1;
  std::vector<BigInt> unit_power(r + 1, BigInt(1));  // (q-1)^k
  for (std::size_t k = 1; k <= r; ++k) unit_power[k] = unit_power[k - 1] * units;
  BigInt total = 1;
  // i: pair weight, k: Hamming weight, i - k: number of runs
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t k = (i + 1) / 2; k <= i - 1; ++k) {
      if (k == 0) continue;
      total += runs_count(n, k, i - k) * unit_power[k];
    }
  }
  if (correction == BallCorrection::kFullWeight && r >= n) total += boost::multiprecision::pow(units, static_cast<unsigned>(n));
  return total;
}

double ball_size_log(std::size_t n, std::uint64_t q, double delta) {
  if (n < 2) fail(ErrorCode::kDomainError, "ball size needs n >= 2");
  if (q < 2) fail(ErrorCode::kDomainError, "ball size needs q >= 2");
  if (!(delta >= 0.0 && delta <= 1.0)) fail(ErrorCode::kDomainError, "relative radius must lie in [0, 1]");
  const auto r = std::min<std::size_t>(n, static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9)));
  const double log_units = std::log(static_cast<double>(q - 1));
  const double dn = static_cast<double>(n);

  std::vector<double> terms{0.0};  // the center
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t k = (i + 1) / 2; k <= i - 1; ++k) {
      if (k == 0) continue;
      const std::size_t w = i - k;
      if (w - 1 > n - k - 1) continue;  // vanishing binomial
      const double dk = static_cast<double>(k);
      const double dw = static_cast<double>(w);
      terms.push_back(std::log(dn) - std::log(dw) + log_binomial(dk - 1, dw - 1) + log_binomial(dn - dk - 1, dw - 1) +
                      dk * log_units);
    }
  }
  if (r >= n) terms.push_back(dn * log_units);

  const double top = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return (top + std::log(acc)) / std::log(static_cast<double>(q));
}

std::uint64_t space_size(std::uint64_t q, std::size_t n) noexcept {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    out *= q;
  }
  return out;
}

namespace {

struct BallWalker {
  const Field& field;
  std::span<const Elem> center;
  std::size_t radius;
  const std::function<void(std::span<const Elem>)>& visit;
  std::vector<Elem> cur;

  void descend(std::size_t pos, std::size_t dist) {
    const std::size_t n = center.size();
    for (std::uint32_t v = 0; v < field.order(); ++v) {
      cur[pos] = Elem{v};
      std::size_t d = dist;
      if (pos > 0 && (cur[pos - 1] != center[pos - 1] || cur[pos] != center[pos])) ++d;
      if (pos + 1 == n && (cur[pos] != center[pos] || cur[0] != center[0])) ++d;
      if (d > radius) continue;
      if (pos + 1 == n) {
        visit(cur);
      } else {
        descend(pos + 1, d);
      }
    }
  }
};

}  // namespace

void for_each_in_ball(const Field& field, std::span<const Elem> center, std::size_t r,
                      const std::function<void(std::span<const Elem>)>& visit) {
  if (center.size() < 2) fail(ErrorCode::kLengthTooShort, "words need length >= 2");
  if (space_size(field.order(), center.size()) > kMaxEnumeration)
    fail(ErrorCode::kSearchSpaceTooLarge, "q^n exceeds 2^24");
  BallWalker walker{field, center, r, visit, std::vector<Elem>(center.size())};
  walker.descend(0, 0);
}

std::vector<Word> ball_enumerate(const Word& center, std::size_t r) {
  std::vector<Word> out;
  for_each_in_ball(*center.field(), center.symbols(), r, [&](std::span<const Elem> w) {
    out.emplace_back(center.field(), std::vector<Elem>(w.begin(), w.end()));
  });
  return out;
}

}  // namespace pairsuite
