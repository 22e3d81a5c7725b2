#include <doctest.h>

#include <random>
#include <vector>

#include "pairsuite/galois.hpp"
#include "pairsuite/linalg.hpp"
#include "pairsuite/polynomial.hpp"
#include "pairsuite/random.hpp"

using namespace pairsuite;

namespace {

// Schoolbook product of encoded elements reduced by the field's modulus,
// written without the library's tables.
std::uint32_t ref_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic();
  const std::uint32_t e = f.degree();
  if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  std::vector<std::uint32_t> da(e), db(e), prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t d = prod.size(); d-- > e;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t v = 0;
  for (std::uint32_t i = e; i-- > 0;) v = v * p + prod[i];
  return v;
}

std::uint64_t multiplicative_order(const Field& f, Elem a) {
  Elem x = a;
  std::uint64_t k = 1;
  while (x != f.one()) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

// Brute-force irreducibility: no monic factor of degree 1..e/2.
bool irreducible_by_trial_division(std::uint32_t p, const std::vector<std::uint32_t>& mod) {
  const auto fp = Field::make(p);
  std::vector<Elem> m;
  for (auto c : mod) m.push_back(Elem{c});
  const std::size_t e = mod.size() - 1;
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<Elem> g(d + 1);
      std::uint64_t v = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = Elem{static_cast<std::uint32_t>(v % p)};
        v /= p;
      }
      g[d] = Elem{1};
      if (poly_mod(*fp, m, g).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field construction") {
  SUBCASE("F_2 has primitive 1") {
    const auto f = Field::make(2, 1);
    CHECK(f->order() == 2);
    CHECK(f->primitive() == Elem{1});
  }
  SUBCASE("F_16 primitive has order 15") {
    const auto f = Field::make(2, 4);
    CHECK(multiplicative_order(*f, f->primitive()) == 15);
  }
  SUBCASE("F_17 primitive by exhausting powers") {
    const auto f = Field::make(17);
    std::vector<bool> seen(17, false);
    Elem x = f->one();
    for (int j = 0; j < 16; ++j) {
      CHECK_FALSE(seen[x.value]);
      seen[x.value] = true;
      x = f->mul(x, f->primitive());
    }
    CHECK(x == f->one());
    CHECK(f->pow(f->primitive(), 16) == f->one());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(Field::make(6), Error);
    CHECK_THROWS_AS(Field::make(2, 17), Error);
    CHECK_THROWS_AS(Field::of_order(12), Error);
    CHECK_THROWS_AS(Field::of_order(1), Error);
    try {
      Field::make(4);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNonPrimeCharacteristic);
    }
    try {
      Field::make(2, 17);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kOrderTooLarge);
    }
    CHECK_THROWS_AS(Field::make(5)->element(5), Error);
  }
}

TEST_CASE("Conway moduli match the published table") {
  struct Row {
    std::uint32_t p, e;
    std::vector<std::uint32_t> mod;
  };
  const std::vector<Row> rows = {
      {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},       {2, 4, {1, 1, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},                    {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},       {5, 2, {2, 4, 1}},          {7, 2, {3, 6, 1}},
  };
  for (const auto& r : rows) {
    const auto f = Field::make(r.p, r.e);
    CHECK(f->conway_modulus());
    CHECK(f->modulus() == r.mod);
    CHECK(f->primitive() == Elem{r.p});  // the class of X
  }
}

TEST_CASE("non-tabulated moduli are irreducible and lexicographically first") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 4}, {11, 2}, {2, 9}, {13, 2}}) {
    const auto f = Field::make(p, e);
    CHECK_FALSE(f->conway_modulus());
    CHECK(irreducible_by_trial_division(p, f->modulus()));
    // every monic polynomial with smaller lower-coefficient index is reducible
    std::uint64_t index = 0;
    for (std::uint32_t i = e; i-- > 0;) index = index * p + f->modulus()[i];
    for (std::uint64_t t = 0; t < index; ++t) {
      std::vector<std::uint32_t> g(e + 1);
      std::uint64_t v = t;
      for (std::uint32_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[e] = 1;
      CHECK_FALSE(irreducible_by_trial_division(p, g));
    }
    CHECK(multiplicative_order(*f, f->primitive()) == f->order() - 1u);
  }
}

TEST_CASE("table multiplication agrees with modulus reduction") {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 49, 81, 121, 256, 1024}) {
    const auto f = Field::of_order(q);
    for (std::uint32_t a = 0; a < std::min<std::uint32_t>(f->order(), 64); ++a)
      for (std::uint32_t b = 0; b < f->order(); b += 1 + f->order() / 64)
        CHECK(f->mul(Elem{a}, Elem{b}).value == ref_mul(*f, a, b));
  }
}

TEST_CASE("field axioms on random samples") {
  for (std::uint64_t q : {2, 3, 4, 5, 8, 16, 17, 27, 256, 257, 65536}) {
    const auto f = Field::of_order(q);
    Rng rng(q);
    auto draw = [&] { return Elem{static_cast<std::uint32_t>(uniform_below(rng, q))}; };
    for (int t = 0; t < 1000; ++t) {
      const Elem a = draw(), b = draw(), c = draw();
      REQUIRE(f->add(a, b) == f->add(b, a));
      REQUIRE(f->mul(a, b) == f->mul(b, a));
      REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      REQUIRE(f->add(a, f->zero()) == a);
      REQUIRE(f->add(a, f->neg(a)) == f->zero());
      REQUIRE(f->sub(f->add(a, b), b) == a);
      if (a != f->zero()) {
        REQUIRE(f->mul(a, f->inv(a)) == f->one());
        REQUIRE(f->exp(f->log(a)) == a);
        REQUIRE(f->div(f->mul(a, b), a) == b);
      }
    }
    CHECK_THROWS_AS(f->inv(f->zero()), Error);
    for (std::uint64_t j = 1; j + 1 < q; ++j) REQUIRE(f->exp(j) != f->one());
    CHECK(f->pow(f->primitive(), q - 1) == f->one());
  }
}

TEST_CASE("FieldElement operators and mismatch") {
  const auto f8 = Field::of_order(8);
  const auto f8b = Field::of_order(8);
  const auto f9 = Field::of_order(9);
  FieldElement a(f8, std::uint64_t{3}), b(f8b, std::uint64_t{5});
  CHECK((a + b).raw() == Elem{6});
  CHECK((a * a.inverse()).raw() == f8->one());
  CHECK((a / a).raw() == f8->one());
  CHECK((-a + a).is_zero());
  CHECK(a.pow(7).raw() == f8->one());
  const FieldElement c(f9, std::uint64_t{1});
  try {
    (void)(a + c);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFieldMismatch);
  }
  CHECK_THROWS_AS(FieldElement(f8, f8->zero()).inverse(), Error);
}

TEST_CASE("big field") {
  SUBCASE("dimensions") {
    CHECK(BigField(Field::of_order(4)).dimension() == 3);
    CHECK(BigField(Field::of_order(8)).dimension() == 7);
    CHECK(BigField(Field::of_order(16)).dimension() == 15);
    CHECK_THROWS_AS(BigField(Field::of_order(2)), Error);
  }
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 17}) {
    const auto f = Field::of_order(q);
    const BigField big(f);
    Rng rng(100 + q);
    auto draw = [&] {
      BigField::Element z(big.dimension());
      for (Elem& c : z) c = Elem{static_cast<std::uint32_t>(uniform_below(rng, q))};
      return z;
    };
    CHECK(big.frobenius(big.one()) == big.one());
    CHECK(big.frobenius(big.generator()) == big.scale(f->primitive(), big.generator()));
    for (int t = 0; t < 20; ++t) {
      const auto u = draw(), v = draw();
      const Elem alpha{static_cast<std::uint32_t>(uniform_below(rng, q))};
      CHECK(big.frobenius(u) == big.pow(u, q));
      CHECK(big.frobenius(big.add(big.scale(alpha, u), v)) == big.add(big.scale(alpha, big.frobenius(u)), big.frobenius(v)));
      auto w = u;
      for (std::uint64_t i = 0; i + 1 < q; ++i) w = big.frobenius(w);
      CHECK(w == u);
      CHECK(big.mul(u, v) == big.mul(v, u));
      CHECK(big.mul(u, big.one()) == u);
      CHECK(big.sub(big.add(u, v), v) == u);
    }
    // X^{q-1} = gamma
    CHECK(big.pow(big.generator(), q - 1) == big.constant(f->primitive()));
  }
}

TEST_CASE("linear algebra") {
  const auto f = Field::of_order(7);
  FieldMatrix a(2, 4);
  const std::uint32_t rows[2][4] = {{1, 2, 3, 4}, {2, 4, 6, 2}};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 4; ++c) a(r, c) = Elem{rows[r][c]};
  const auto ech = row_reduce(*f, a);
  CHECK(ech.rank() == 2);
  CHECK(ech.pivot_cols == std::vector<std::size_t>{0, 3});
  const auto basis = nullspace_basis(*f, a);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    for (Elem e : mat_vec(*f, a, v)) CHECK(e == f->zero());
  }
  CHECK(basis[0][1] == f->one());
  CHECK(basis[0][2] == f->zero());
  const std::vector<Elem> b{Elem{1}, Elem{0}};
  const auto sol = solve_affine(*f, a, b);
  REQUIRE(sol.particular);
  CHECK(mat_vec(*f, a, *sol.particular) == b);
  FieldMatrix z(1, 1);
  const std::vector<Elem> rhs{Elem{1}};
  CHECK_FALSE(solve_affine(*f, z, rhs).particular);
}

TEST_CASE("polynomials") {
  const auto f = Field::of_order(5);
  const Polynomial p(f, {Elem{1}, Elem{2}, Elem{0}});
  CHECK(p.degree() == 1);
  CHECK(Polynomial(f).degree() == -1);
  CHECK(p(Elem{3}) == Elem{2});
  const std::vector<Elem> roots{Elem{1}, Elem{4}};
  const Polynomial r = Polynomial::from_roots(f, roots);
  CHECK(r(Elem{1}) == f->zero());
  CHECK(r(Elem{4}) == f->zero());
  CHECK(r.degree() == 2);
  CHECK((r - r).is_zero());
  CHECK((p * r).degree() == 3);
  const auto g = poly_gcd(*f, (p * r).coefficients(), r.coefficients());
  CHECK(g == r.coefficients());  // r is monic
  CHECK(poly_mod(*f, (p * r).coefficients(), r.coefficients()).empty());
}
