#include "pairsuite/rs_codes.hpp"

#include <algorithm>
#include <limits>

namespace pairsuite {

CodeSpec::CodeSpec(FieldPtr field, std::size_t n, std::size_t k) : field_(std::move(field)), n_(n), k_(k) {
  if (k < 1 || k > n) fail(ErrorCode::kDomainError, "RS code needs 1 <= k <= n");
  if (n >= field_->order()) fail(ErrorCode::kDomainError, "RS code needs n <= q - 1 distinct powers of gamma");
  if (n < 2) fail(ErrorCode::kLengthTooShort, "RS code needs n >= 2");
}

Polynomial message_polynomial(const CodeSpec& spec, std::span<const Elem> coeffs) {
  if (coeffs.size() > spec.dimension()) fail(ErrorCode::kDegreeTooLarge, "message longer than k");
  return Polynomial(spec.field(), std::vector<Elem>(coeffs.begin(), coeffs.end()));
}

Word rs_encode(const CodeSpec& spec, const Polynomial& f) {
  spec.field()->require_same(*f.field());
  if (f.degree() >= static_cast<int>(spec.dimension()))
    fail(ErrorCode::kDegreeTooLarge, "deg f = " + std::to_string(f.degree()) + " >= k");
  std::vector<Elem> out(spec.length());
  for (std::size_t i = 0; i < spec.length(); ++i) out[i] = f(spec.point(i));
  return Word(spec.field(), std::move(out));
}

FoldedWord fold2(const Word& x) {
  FoldedWord out;
  const auto s = x.symbols();
  out.top.assign(s.begin(), s.end() - 1);
  out.bottom.assign(s.begin() + 1, s.end());
  return out;
}

Word unfold(const FoldedWord& folded, FieldPtr field) {
  if (folded.columns() == 0 || folded.bottom.size() != folded.columns())
    fail(ErrorCode::kLengthTooShort, "folded word needs at least one column");
  for (std::size_t i = 0; i + 1 < folded.columns(); ++i) {
    if (folded.bottom[i] != folded.top[i + 1]) fail(ErrorCode::kDomainError, "folded columns do not overlap");
  }
  std::vector<Elem> out = folded.top;
  out.push_back(folded.bottom.back());
  return Word(std::move(field), std::move(out));
}

std::size_t hamming_distance(const FoldedWord& a, const FoldedWord& b) {
  if (a.columns() != b.columns()) fail(ErrorCode::kLengthMismatch, "folded words of different width");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.columns(); ++i) d += (a.top[i] != b.top[i] || a.bottom[i] != b.bottom[i]);
  return d;
}

Witness min_pair_distance_witness(const CodeSpec& spec) {
  const std::size_t k = spec.dimension();
  if (k < 2 || k >= spec.length()) fail(ErrorCode::kDomainError, "witness needs 2 <= k < n");
  std::vector<Elem> roots;
  for (std::size_t i = 0; i + 1 < k; ++i) roots.push_back(spec.point(i));
  Polynomial f = Polynomial::from_roots(spec.field(), roots);
  Word c = rs_encode(spec, f);
  return Witness{std::move(f), std::move(c)};
}

void for_each_message(const CodeSpec& spec, const std::function<void(const Polynomial&)>& visit) {
  const Field& f = *spec.field();
  const std::size_t k = spec.dimension();
  std::vector<Elem> coeffs(k, Elem{0});
  while (true) {
    visit(Polynomial(spec.field(), coeffs));
    std::size_t i = 0;
    while (i < k && coeffs[i].value + 1 == f.order()) coeffs[i++] = Elem{0};
    if (i == k) return;
    coeffs[i] = Elem{coeffs[i].value + 1};
  }
}

std::size_t min_pair_distance_exhaustive(const CodeSpec& spec) {
  if (space_size(spec.field()->order(), spec.dimension()) > (std::uint64_t{1} << 20))
    fail(ErrorCode::kSearchSpaceTooLarge, "q^k exceeds 2^20");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_message(spec, [&](const Polynomial& f) {
    if (f.is_zero()) return;
    best = std::min(best, pair_weight(rs_encode(spec, f)));
  });
  return best;
}

Word inject_pair_errors(const Word& x, std::size_t budget, Rng& rng, ErrorPattern pattern) {
  const std::size_t n = x.size();
  if (budget > n) fail(ErrorCode::kDomainError, "pair-error budget exceeds length");
  if (budget < 2) return x;

  // wt_P = h + r for r separated runs of total length h < n
  const std::size_t runs = pattern == ErrorPattern::kBurst ? 1 : budget / 2;
  const std::size_t covered = budget - runs;
  const std::size_t zeros = n - covered;  // >= runs because budget <= n

  std::vector<std::size_t> run_len(runs, covered / runs);
  for (std::size_t extra = covered % runs, placed = 0; placed < extra;) {
    // hand the leftover positions to distinct random runs
    const std::size_t idx = uniform_below(rng, runs);
    if (run_len[idx] == covered / runs) {
      ++run_len[idx];
      ++placed;
    }
  }

  // gaps: a uniform composition of `zeros` into `runs` positive parts
  std::vector<std::size_t> cuts(zeros - 1);
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
  for (std::size_t i = 0; i + 1 < runs; ++i) {
    const std::size_t j = i + uniform_below(rng, cuts.size() - i);
    std::swap(cuts[i], cuts[j]);
  }
  std::vector<std::size_t> chosen(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(runs - 1));
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::size_t> gap_len;
  std::size_t prev = 0;
  for (std::size_t c : chosen) {
    gap_len.push_back(c - prev);
    prev = c;
  }
  gap_len.push_back(zeros - prev);

  const Field& f = *x.field();
  std::vector<Elem> y(x.symbols().begin(), x.symbols().end());
  std::size_t pos = uniform_below(rng, n);
  for (std::size_t r = 0; r < runs; ++r) {
    for (std::size_t i = 0; i < run_len[r]; ++i) {
      const Elem e{static_cast<std::uint32_t>(1 + uniform_below(rng, f.order() - 1))};
      y[pos] = f.add(y[pos], e);
      pos = (pos + 1) % n;
    }
    pos = (pos + gap_len[r]) % n;
  }
  return Word(x.field(), std::move(y));
}

}  // namespace pairsuite
