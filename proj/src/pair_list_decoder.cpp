#include "pairsuite/pair_list_decoder.hpp"

#include <algorithm>
#include <cmath>

#include "pairsuite/bounds.hpp"
#include "pairsuite/linalg.hpp"

namespace pairsuite {

std::size_t decode_radius(const CodeSpec& spec) {
  const std::size_t n = spec.length();
  const std::size_t k = spec.dimension();
  if (n < k + 3) fail(ErrorCode::kRadiusNonpositive, "n - 2 - k must be positive");
  const std::size_t budget = 2 * (n - 2 - k) / 3;
  if (budget == 0) fail(ErrorCode::kRadiusNonpositive, "decode radius rounds to zero");
  return budget;
}

std::size_t interpolation_degree(const CodeSpec& spec) {
  const std::size_t s = spec.length() - spec.dimension();
  return (s + 2) / 3;
}

InterpolationResult interpolate(const CodeSpec& spec, const FoldedWord& folded) {
  const Field& f = *spec.field();
  const std::size_t n = spec.length();
  const std::size_t k = spec.dimension();
  const std::size_t m = interpolation_degree(spec);
  if (folded.columns() != n - 1) fail(ErrorCode::kLengthMismatch, "folded word must have n - 1 columns");
  const std::size_t n0 = m + k;  // coefficients of a0
  const std::size_t n1 = m + 1;  // coefficients of a1 and a2
  const std::size_t unknowns = n0 + 2 * n1;
  if (unknowns <= n - 1) fail(ErrorCode::kParameterError, "interpolation system is not underdetermined");
  if (n0 > f.order() - 1) fail(ErrorCode::kParameterError, "deg a0 must stay below q - 1");

  FieldMatrix a(n - 1, unknowns);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Elem alpha = spec.point(i);
    Elem power = f.one();
    for (std::size_t j = 0; j < n0; ++j) {
      a(i, j) = power;
      if (j < n1) {
        a(i, n0 + j) = f.mul(folded.top[i], power);
        a(i, n0 + n1 + j) = f.mul(folded.bottom[i], power);
      }
      power = f.mul(power, alpha);
    }
  }

  const auto basis = nullspace_basis(f, a);
  const std::vector<Elem>& v = basis.front();
  auto slice = [&](std::size_t from, std::size_t len) {
    return Polynomial(spec.field(), std::vector<Elem>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                                      v.begin() + static_cast<std::ptrdiff_t>(from + len)));
  };
  return InterpolationResult{slice(0, n0),   slice(n0, n1), slice(n0 + n1, n1),         m,
                             unknowns,       n - 1,         unknowns - basis.size(), basis.size()};
}

std::vector<Elem> interpolation_residuals(const CodeSpec& spec, const InterpolationResult& q,
                                          const FoldedWord& folded) {
  const Field& f = *spec.field();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < folded.columns(); ++i) {
    const Elem alpha = spec.point(i);
    out.push_back(f.add(q.a0(alpha), f.add(f.mul(q.a1(alpha), folded.top[i]), f.mul(q.a2(alpha), folded.bottom[i]))));
  }
  return out;
}

std::vector<BigField::Element> solve_linearized(const BigField& big, const Polynomial& a0, const Polynomial& a1,
                                                const Polynomial& a2) {
  const Field& f = *big.base();
  const std::size_t dim = big.dimension();
  if (a0.is_zero() && a1.is_zero() && a2.is_zero())
    fail(ErrorCode::kParameterError, "linearized equation with all-zero coefficients");

  FieldMatrix map(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    // (a1 + gamma^j a2) X^j
    const Elem g = f.exp(j);
    const std::size_t len = std::max(a1.coefficients().size(), a2.coefficients().size());
    std::vector<Elem> shifted(j + len, Elem{0});
    for (std::size_t i = 0; i < len; ++i) shifted[j + i] = f.add(a1.coeff(i), f.mul(g, a2.coeff(i)));
    const auto col = big.reduce(shifted);
    for (std::size_t r = 0; r < dim; ++r) map(r, j) = col[r];
  }
  auto rhs = big.reduce(a0.coefficients());
  for (Elem& c : rhs) c = f.neg(c);

  const AffineSolution sol = solve_affine(f, map, rhs);
  std::vector<BigField::Element> roots;
  if (!sol.particular) return roots;
  if (sol.kernel.size() > 1)
    fail(ErrorCode::kParameterError, "linearized map has kernel dimension " + std::to_string(sol.kernel.size()));
  if (sol.kernel.empty()) {
    roots.push_back(*sol.particular);
  } else {
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      BigField::Element z = *sol.particular;
      for (std::size_t i = 0; i < dim; ++i) z[i] = f.add(z[i], f.mul(Elem{c}, sol.kernel[0][i]));
      roots.push_back(std::move(z));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool DecodeResult::contains(const Polynomial& f) const {
  return std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& c) { return c.message == f; });
}

namespace {

void sort_candidates(std::vector<Candidate>& list, std::size_t k) {
  std::sort(list.begin(), list.end(),
            [k](const Candidate& a, const Candidate& b) { return a.message.padded(k) < b.message.padded(k); });
  list.erase(std::unique(list.begin(), list.end(),
                         [](const Candidate& a, const Candidate& b) { return a.message == b.message; }),
             list.end());
}

}  // namespace

DecodeResult list_decode(const CodeSpec& spec, const Word& received, std::optional<std::size_t> radius) {
  spec.field()->require_same(*received.field());
  if (received.size() != spec.length()) fail(ErrorCode::kLengthMismatch, "received word length differs from n");

  DecodeResult out;
  std::optional<std::size_t> guaranteed;
  try {
    guaranteed = decode_radius(spec);
  } catch (const Error&) {
    if (!radius) throw;
  }
  out.radius = radius.value_or(guaranteed.value_or(0));
  out.diagnostics.completeness_guaranteed = guaranteed && out.radius <= *guaranteed;

  const std::size_t k = spec.dimension();
  const std::size_t m = interpolation_degree(spec);
  if (guaranteed && out.radius == *guaranteed && spec.length() - 1 - out.radius <= m + k - 1)
    fail(ErrorCode::kParameterError, "agreement bound n - 1 - radius > m + k - 1 violated");

  const FoldedWord folded = fold2(received);
  const InterpolationResult q = interpolate(spec, folded);
  out.diagnostics.degree_parameter = q.degree_parameter;
  out.diagnostics.nullspace_dimension = q.nullspace_dimension;

  const BigField big(spec.field());
  const auto roots = solve_linearized(big, q.a0, q.a1, q.a2);
  out.diagnostics.roots_found = roots.size();

  for (const auto& z : roots) {
    Polynomial f(spec.field(), z);
    if (f.degree() > static_cast<int>(k) - 1) continue;
    ++out.diagnostics.roots_low_degree;
    Word c = rs_encode(spec, f);
    const std::size_t d = pair_distance(c, received);
    if (d <= out.radius) out.candidates.push_back(Candidate{std::move(f), std::move(c), d});
  }
  sort_candidates(out.candidates, k);
  return out;
}

std::vector<Candidate> exhaustive_decode(const CodeSpec& spec, const Word& received, std::size_t radius) {
  if (space_size(spec.field()->order(), spec.dimension()) > (std::uint64_t{1} << 20))
    fail(ErrorCode::kSearchSpaceTooLarge, "q^k exceeds 2^20");
  std::vector<Candidate> out;
  for_each_message(spec, [&](const Polynomial& f) {
    Word c = rs_encode(spec, f);
    const std::size_t d = pair_distance(c, received);
    if (d <= radius) out.push_back(Candidate{f, std::move(c), d});
  });
  sort_candidates(out, spec.dimension());
  return out;
}

JohnsonMargin beyond_johnson_margin(const CodeSpec& spec) {
  const std::size_t n = spec.length();
  const std::size_t k = spec.dimension();
  if (2 * k < n + 2 || k >= n) fail(ErrorCode::kDomainError, "margin needs 1 + n/2 <= k < n");
  const double dn = static_cast<double>(n);
  JohnsonMargin out{};
  out.relative_distance = static_cast<double>(n - k + 2) / dn;
  out.decoder_tau = 2.0 * (static_cast<double>(n) - 2.0 - static_cast<double>(k)) / (3.0 * dn);
  out.johnson_tau = johnson_radius(spec.field()->order(), out.relative_distance);
  out.margin = out.decoder_tau - out.johnson_tau;
  return out;
}

bool beats_large_q_johnson(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) fail(ErrorCode::kDomainError, "delta outside [0, 1]");
  return 2.0 * delta > 3.0 * (1.0 - std::sqrt(1.0 - delta));
}

}  // namespace pairsuite
