#pragma once

#include <optional>
#include <vector>

#include "pairsuite/galois.hpp"
#include "pairsuite/polynomial.hpp"
#include "pairsuite/rs_codes.hpp"

namespace pairsuite {

/// floor((2/3)(n - 2 - k)): the absolute pair-error budget the decoder
/// guarantees. Throws kRadiusNonpositive when it is <= 0.
std::size_t decode_radius(const CodeSpec& spec);

/// ceil((n - k) / 3), the degree parameter of the interpolation polynomial.
std::size_t interpolation_degree(const CodeSpec& spec);

/// Q(x, y1, y2) = a0(x) + a1(x) y1 + a2(x) y2 with deg a0 <= m + k - 1 and
/// deg a1, deg a2 <= m, vanishing at every folded column
/// (gamma^i, top_i, bottom_i).
struct InterpolationResult {
  Polynomial a0;
  Polynomial a1;
  Polynomial a2;
  std::size_t degree_parameter;
  std::size_t unknowns;         // 3m + k + 2
  std::size_t equations;        // n - 1
  std::size_t rank;
  std::size_t nullspace_dimension;
};

/// Builds the (n-1) x (3m+k+2) constraint system and returns its first
/// nullspace basis vector under deterministic elimination.
InterpolationResult interpolate(const CodeSpec& spec, const FoldedWord& folded);

/// Evaluates a0(gamma^i) + a1(gamma^i) top_i + a2(gamma^i) bottom_i for each column.
std::vector<Elem> interpolation_residuals(const CodeSpec& spec, const InterpolationResult& q, const FoldedWord& folded);

/// All z in L with a0 + a1 z + a2 z^q = 0. z -> a1 z + a2 z^q is F_q-linear
/// on L; its matrix on the monomial basis has column j equal to
/// (a1 + gamma^j a2) X^j, so the roots are one affine solve. The kernel has
/// dimension at most 1, giving 0, 1 or q roots. Output is sorted.
std::vector<BigField::Element> solve_linearized(const BigField& big, const Polynomial& a0, const Polynomial& a1,
                                                const Polynomial& a2);

struct Candidate {
  Polynomial message;
  Word codeword;
  std::size_t distance;
};

struct DecodeDiagnostics {
  std::size_t degree_parameter = 0;
  std::size_t nullspace_dimension = 0;
  std::size_t roots_found = 0;      // solutions in L
  std::size_t roots_low_degree = 0;  // of those, deg <= k - 1
  bool completeness_guaranteed = true;
};

struct DecodeResult {
  std::vector<Candidate> candidates;  // ascending lexicographic coefficient order
  std::size_t radius = 0;
  DecodeDiagnostics diagnostics;

  bool contains(const Polynomial& f) const;
};

/// Lists every message f with deg f <= k-1 and d_P(c_f, y) <= radius.
/// The default radius is decode_radius(spec). A caller-supplied radius above
/// it still runs, with completeness_guaranteed = false.
DecodeResult list_decode(const CodeSpec& spec, const Word& received, std::optional<std::size_t> radius = std::nullopt);

/// Reference decoder: tries all q^k messages (guard q^k <= 2^20).
std::vector<Candidate> exhaustive_decode(const CodeSpec& spec, const Word& received, std::size_t radius);

struct JohnsonMargin {
  double relative_distance;  // (n - k + 2) / n
  double decoder_tau;        // (2/3)(n - 2 - k) / n
  double johnson_tau;
  double margin;             // decoder_tau - johnson_tau
};

/// Requires 1 + n/2 <= k < n.
JohnsonMargin beyond_johnson_margin(const CodeSpec& spec);

/// (2/3) delta > 1 - sqrt(1 - delta), evaluated as 2 delta > 3 (1 - sqrt(1 - delta))
/// so that the equality case delta = 3/4 is exact.
bool beats_large_q_johnson(double delta);

}  // namespace pairsuite
