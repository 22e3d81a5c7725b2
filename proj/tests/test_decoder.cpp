#include <doctest.h>

#include <set>
#include <vector>

#include "pairsuite/bounds.hpp"
#include "pairsuite/pair_list_decoder.hpp"

using namespace pairsuite;

namespace {

Polynomial random_message(const CodeSpec& spec, Rng& rng) {
  std::vector<Elem> c(spec.dimension());
  for (Elem& e : c) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, spec.field()->order()))};
  return message_polynomial(spec, c);
}

Word random_word(const FieldPtr& f, std::size_t n, Rng& rng) {
  std::vector<Elem> s(n);
  for (Elem& e : s) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, f->order()))};
  return Word(f, s);
}

Polynomial random_poly(const FieldPtr& f, std::size_t len, Rng& rng) {
  std::vector<Elem> c(len);
  for (Elem& e : c) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, f->order()))};
  return Polynomial(f, c);
}

// a0 + a1 z + a2 z^q in L, with z^q taken by repeated multiplication.
bool is_root(const BigField& big, const Polynomial& a0, const Polynomial& a1, const Polynomial& a2,
             const BigField::Element& z) {
  const std::uint64_t q = big.base()->order();
  const auto v = big.add(big.reduce(a0.coefficients()),
                         big.add(big.mul(big.reduce(a1.coefficients()), z),
                                 big.mul(big.reduce(a2.coefficients()), big.pow(z, q))));
  return big.is_zero(v);
}

std::vector<std::vector<Elem>> messages_of(const std::vector<Candidate>& list, std::size_t k) {
  std::vector<std::vector<Elem>> out;
  for (const Candidate& c : list) out.push_back(c.message.padded(k));
  return out;
}

}  // namespace

TEST_CASE("decode radius") {
  const auto f16 = Field::of_order(16);
  const auto f8 = Field::of_order(8);
  CHECK(decode_radius(CodeSpec(f16, 15, 4)) == 6);
  CHECK(decode_radius(CodeSpec(f8, 7, 2)) == 2);
  CHECK(decode_radius(CodeSpec(Field::of_order(17), 16, 5)) == 6);
  try {
    decode_radius(CodeSpec(f8, 7, 5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRadiusNonpositive);
  }
  CHECK_THROWS_AS(decode_radius(CodeSpec(f8, 7, 4)), Error);  // floor(2/3) = 0

  // n - 1 - radius > m + k - 1 whenever the radius is the guaranteed one
  for (std::size_t n = 3; n <= 256; ++n) {
    for (std::size_t k = 1; k + 3 <= n; ++k) {
      const std::size_t budget = 2 * (n - 2 - k) / 3;
      const std::size_t m = (n - k + 2) / 3;
      REQUIRE(n - 1 - budget > m + k - 1);
    }
  }
}

TEST_CASE("interpolation") {
  const auto f = Field::of_order(8);
  const CodeSpec spec(f, 7, 2);
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const Word y = t % 2 ? random_word(f, 7, rng) : rs_encode(spec, random_message(spec, rng));
    const FoldedWord folded = fold2(y);
    const InterpolationResult q = interpolate(spec, folded);
    CHECK(q.degree_parameter == 2);
    CHECK(q.unknowns == 3 * 2 + 2 + 2);
    CHECK(q.equations == 6);
    CHECK(q.rank <= q.equations);
    CHECK(q.nullspace_dimension >= q.unknowns - q.equations);
    CHECK_FALSE((q.a0.is_zero() && q.a1.is_zero() && q.a2.is_zero()));
    CHECK(q.a0.degree() <= 3);
    CHECK(q.a1.degree() <= 2);
    CHECK(q.a2.degree() <= 2);
    for (Elem r : interpolation_residuals(spec, q, folded)) REQUIRE(r == f->zero());
  }
  const Word y = random_word(f, 7, rng);
  const InterpolationResult a = interpolate(spec, fold2(y)), b = interpolate(spec, fold2(y));
  CHECK(a.a0 == b.a0);
  CHECK(a.a1 == b.a1);
  CHECK(a.a2 == b.a2);
  CHECK_THROWS_AS(interpolate(spec, fold2(Word::zeros(f, 5))), Error);
}

TEST_CASE("linearized roots") {
  SUBCASE("unique zero root") {
    const auto f = Field::of_order(8);
    const BigField big(f);
    const auto roots = solve_linearized(big, Polynomial(f), Polynomial(f, {f->one()}), Polynomial(f));
    REQUIRE(roots.size() == 1);
    CHECK(big.is_zero(roots[0]));
  }
  SUBCASE("constants are fixed by Frobenius") {
    for (std::uint64_t q : {4, 7, 8, 9}) {
      const auto f = Field::of_order(q);
      const BigField big(f);
      const Elem g = f->primitive();
      for (std::uint32_t c = 0; c < q; ++c) {
        // a1 = 1, a2 = gamma, a0 = -(1 + gamma) c
        const Polynomial a0(f, {f->neg(f->mul(f->add(f->one(), g), Elem{c}))});
        const auto roots = solve_linearized(big, a0, Polynomial(f, {f->one()}), Polynomial(f, {g}));
        const bool found = std::find(roots.begin(), roots.end(), big.constant(Elem{c})) != roots.end();
        CHECK(found);
        for (const auto& z : roots) CHECK(is_root(big, a0, Polynomial(f, {f->one()}), Polynomial(f, {g}), z));
      }
    }
  }
  SUBCASE("brute force over small L") {
    for (std::uint64_t q : {3, 4, 5}) {
      const auto f = Field::of_order(q);
      const BigField big(f);
      const std::size_t dim = big.dimension();
      std::uint64_t size = 1;
      for (std::size_t i = 0; i < dim; ++i) size *= q;
      Rng rng(q);
      for (int t = 0; t < 40; ++t) {
        const Polynomial a0 = random_poly(f, dim, rng);
        Polynomial a1 = random_poly(f, 2, rng), a2 = random_poly(f, 2, rng);
        if (t % 4 == 0) a2 = Polynomial(f);  // purely linear map
        if (a0.is_zero() && a1.is_zero() && a2.is_zero()) continue;
        std::vector<BigField::Element> want;
        for (std::uint64_t code = 0; code < size; ++code) {
          BigField::Element z(dim);
          std::uint64_t v = code;
          for (std::size_t i = 0; i < dim; ++i) {
            z[i] = Elem{static_cast<std::uint32_t>(v % q)};
            v /= q;
          }
          if (is_root(big, a0, a1, a2, z)) want.push_back(z);
        }
        std::sort(want.begin(), want.end());
        std::vector<BigField::Element> got;
        try {
          got = solve_linearized(big, a0, a1, a2);
        } catch (const Error&) {
          // kernel dimension > 1 only when a1 + gamma^j a2 vanishes in L for
          // two or more j; then the oracle has at least q^2 roots
          CHECK(want.size() >= q * q);
          continue;
        }
        CHECK(got == want);
        CHECK((got.empty() || got.size() == 1 || got.size() == q));
      }
    }
  }
  SUBCASE("substitution on F_16") {
    const auto f = Field::of_order(16);
    const BigField big(f);
    Rng rng(16);
    for (int t = 0; t < 30; ++t) {
      const Polynomial a0 = random_poly(f, 6, rng), a1 = random_poly(f, 3, rng), a2 = random_poly(f, 3, rng);
      for (const auto& z : solve_linearized(big, a0, a1, a2)) CHECK(is_root(big, a0, a1, a2, z));
    }
  }
  const auto f = Field::of_order(5);
  CHECK_THROWS_AS(solve_linearized(BigField(f), Polynomial(f), Polynomial(f), Polynomial(f)), Error);
  CHECK(solve_linearized(BigField(f), Polynomial(f, {f->one()}), Polynomial(f), Polynomial(f)).empty());
}

TEST_CASE("list decoding small codes") {
  const auto f = Field::of_order(8);
  const CodeSpec spec(f, 7, 2);
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const Polynomial msg = random_message(spec, rng);
    const Word c = rs_encode(spec, msg);
    const DecodeResult clean = list_decode(spec, c);
    CHECK(clean.contains(msg));
    const Word y = inject_pair_errors(c, 2, rng);
    const DecodeResult got = list_decode(spec, y);
    CHECK(got.radius == 2);
    CHECK(got.diagnostics.completeness_guaranteed);
    CHECK(got.contains(msg));
    CHECK(got.candidates.size() <= 8);
    CHECK(messages_of(got.candidates, 2) == messages_of(exhaustive_decode(spec, y, 2), 2));
    for (const Candidate& cand : got.candidates) {
      CHECK(cand.message.degree() <= 1);
      CHECK(rs_encode(spec, cand.message) == cand.codeword);
      CHECK(pair_distance(cand.codeword, y) == cand.distance);
      CHECK(cand.distance <= 2);
    }
  }
}

TEST_CASE("decoder agrees with exhaustive search") {
  for (auto [q, n, k] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>{
           {8, 7, 2}, {8, 7, 3}, {9, 8, 2}, {9, 8, 3}, {7, 6, 1}, {16, 15, 3}, {16, 15, 2}, {64, 20, 2}, {13, 12, 3}}) {
    const auto f = Field::of_order(q);
    const CodeSpec spec(f, n, k);
    const std::size_t r = decode_radius(spec);
    Rng rng(q * 31 + n + k);
    for (int t = 0; t < 20; ++t) {
      // near a codeword half the time, uniform otherwise
      const Word y = t % 2 ? random_word(f, n, rng)
                           : inject_pair_errors(rs_encode(spec, random_message(spec, rng)), r, rng);
      const DecodeResult got = list_decode(spec, y);
      REQUIRE(messages_of(got.candidates, k) == messages_of(exhaustive_decode(spec, y, r), k));
      REQUIRE(got.candidates.size() <= q);
    }
  }
}

TEST_CASE("completeness at larger parameters") {
  for (auto [q, n, k] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>{{16, 15, 4}, {17, 16, 5}}) {
    const auto f = Field::of_order(q);
    const CodeSpec spec(f, n, k);
    const std::size_t r = decode_radius(spec);
    CHECK(r == 6);
    Rng rng(q);
    for (int t = 0; t < 60; ++t) {
      const Polynomial msg = random_message(spec, rng);
      const Word y = inject_pair_errors(rs_encode(spec, msg), r, rng, t % 3 ? ErrorPattern::kSpread : ErrorPattern::kBurst);
      REQUIRE(pair_distance(y, rs_encode(spec, msg)) == r);
      const DecodeResult got = list_decode(spec, y);
      REQUIRE(got.contains(msg));
      REQUIRE(got.candidates.size() <= q);
      REQUIRE(got.diagnostics.roots_low_degree >= got.candidates.size());
    }
  }
}

TEST_CASE("forced radius above the guarantee") {
  const auto f = Field::of_order(16);
  const CodeSpec spec(f, 15, 4);
  Rng rng(5);
  const Polynomial msg = random_message(spec, rng);
  const Word y = inject_pair_errors(rs_encode(spec, msg), 4, rng);
  const DecodeResult got = list_decode(spec, y, 9);
  CHECK(got.radius == 9);
  CHECK_FALSE(got.diagnostics.completeness_guaranteed);
  for (const Candidate& c : got.candidates) CHECK(c.distance <= 9);
  CHECK(list_decode(spec, y, 3).diagnostics.completeness_guaranteed);
  CHECK_THROWS_AS(list_decode(spec, Word::zeros(f, 14)), Error);
  CHECK_THROWS_AS(list_decode(CodeSpec(Field::of_order(8), 7, 5), Word::zeros(Field::of_order(8), 7)), Error);
}

TEST_CASE("beyond the Johnson bound") {
  for (int i = 1; i <= 14; ++i) CHECK(beats_large_q_johnson(0.05 * i));
  CHECK_FALSE(beats_large_q_johnson(0.75));
  CHECK_FALSE(beats_large_q_johnson(0.9));
  const JohnsonMargin m = beyond_johnson_margin(CodeSpec(Field::of_order(257), 256, 130));
  CHECK(m.relative_distance == doctest::Approx(0.5));
  CHECK(m.decoder_tau == doctest::Approx(0.3229).epsilon(1e-3));
  CHECK(m.johnson_tau == doctest::Approx(johnson_radius(257, 0.5)));
  CHECK(m.johnson_tau == doctest::Approx(0.2929).epsilon(1e-3));
  CHECK(m.margin > 0.025);
  CHECK_THROWS_AS(beyond_johnson_margin(CodeSpec(Field::of_order(257), 256, 100)), Error);
  CHECK_THROWS_AS(beats_large_q_johnson(1.5), Error);
}
