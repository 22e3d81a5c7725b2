#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "pairsuite/pair_metric.hpp"
#include "pairsuite/random.hpp"

using namespace pairsuite;

namespace {

// Pair distance straight from the definition, on plain integers.
std::size_t naive_pair_distance(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  const std::size_t n = x.size();
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    d += (x[i] != y[i] || x[j] != y[j]);
  }
  return d;
}

std::uint64_t brute_ball(std::size_t n, std::uint32_t q, std::size_t r) {
  std::vector<std::uint32_t> zero(n, 0), w(n, 0);
  std::uint64_t count = 0;
  while (true) {
    count += naive_pair_distance(zero, w) <= r;
    std::size_t i = 0;
    while (i < n && w[i] + 1 == q) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return count;
}

// Binary patterns of length n, weight l and w maximal cyclic runs.
std::uint64_t brute_runs(std::size_t n, std::size_t l, std::size_t w) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != l) continue;
    std::size_t runs = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool cur = (mask >> i) & 1;
      const bool prev = (mask >> ((i + n - 1) % n)) & 1;
      runs += cur && !prev;
    }
    count += runs == w;
  }
  return count;
}

Word word_of(const FieldPtr& f, std::initializer_list<std::uint32_t> v) {
  std::vector<Elem> s;
  for (auto x : v) s.push_back(Elem{x});
  return Word(f, s);
}

Word random_word(const FieldPtr& f, std::size_t n, Rng& rng) {
  std::vector<Elem> s(n);
  for (Elem& e : s) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, f->order()))};
  return Word(f, s);
}

}  // namespace

TEST_CASE("pair read") {
  const auto f2 = Field::of_order(2);
  const PairView z = pair_read(word_of(f2, {0, 0, 0}));
  CHECK(z.size() == 3);
  for (const auto& pr : z) CHECK(pr == SymbolPair{Elem{0}, Elem{0}});
  const PairView v = pair_read(word_of(f2, {1, 0, 0, 0}));
  const PairView want{{Elem{1}, Elem{0}}, {Elem{0}, Elem{0}}, {Elem{0}, Elem{0}}, {Elem{0}, Elem{1}}};
  CHECK(v == want);
  Rng rng(3);
  const auto f5 = Field::of_order(5);
  const Word x = random_word(f5, 9, rng);
  const PairView px = pair_read(x);
  for (std::size_t i = 0; i < 9; ++i) CHECK(px[i].second == px[(i + 1) % 9].first);
  CHECK_THROWS_AS(Word(f2, {Elem{1}}), Error);
}

TEST_CASE("distances and weights") {
  const auto f2 = Field::of_order(2);
  CHECK(pair_distance(word_of(f2, {0, 0, 0, 0}), word_of(f2, {1, 0, 0, 0})) == 2);
  CHECK(pair_weight(Word::zeros(f2, 4)) == 0);
  CHECK(pair_weight(word_of(f2, {1, 0, 0, 0})) == 2);
  CHECK(pair_weight(word_of(f2, {1, 1, 1, 1})) == 4);
  const Word x = word_of(f2, {1, 0, 1, 1});
  CHECK(pair_distance(x, x) == 0);
  CHECK_THROWS_AS(pair_distance(x, Word::zeros(f2, 5)), Error);
  CHECK_THROWS_AS(pair_distance(x, Word::zeros(Field::of_order(3), 4)), Error);
}

TEST_CASE("run profile") {
  const auto f2 = Field::of_order(2);
  auto check = [&](std::initializer_list<std::uint32_t> v, std::size_t h, std::size_t r, std::size_t wp) {
    const Word x = word_of(f2, v);
    const RunProfile p = run_profile(x);
    CHECK(p.weight == h);
    CHECK(p.runs == r);
    CHECK(pair_weight(x) == wp);
  };
  check({1, 0, 0, 0}, 1, 1, 2);
  check({1, 0, 1, 0}, 2, 2, 4);
  check({1, 1, 1, 1}, 4, 1, 4);
  check({1, 0, 0, 1}, 2, 1, 3);  // wraps around
  Rng rng(11);
  const auto f3 = Field::of_order(3);
  for (int t = 0; t < 2000; ++t) {
    const Word x = random_word(f3, 10, rng);
    const RunProfile p = run_profile(x);
    if (p.weight > 0 && p.weight < 10) REQUIRE(pair_weight(x) == p.weight + p.runs);
  }
}

TEST_CASE("runs count") {
  CHECK(runs_count(2, 1, 1) == 2);
  CHECK(runs_count(4, 3, 2) == 0);
  CHECK(runs_count(6, 3, 2) == 12);
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t l = 1; l < n; ++l)
      for (std::size_t w = 1; w <= l; ++w) REQUIRE(runs_count(n, l, w) == brute_runs(n, l, w));
  CHECK_THROWS_AS(runs_count(4, 4, 1), Error);
  CHECK_THROWS_AS(runs_count(4, 2, 3), Error);
  CHECK_THROWS_AS(runs_count(1, 1, 1), Error);
}

TEST_CASE("ball size matches enumeration") {
  CHECK(ball_size_exact(4, 2, 0) == 1);
  CHECK(ball_size_exact(2, 2, 2) == 4);
  CHECK(ball_size_exact(2, 2, 2, BallCorrection::kNone) == 3);
  CHECK(ball_size_exact(5, 2, 3) == 11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 16u}) {
    for (std::size_t n = 2; space_size(q, n) <= (1u << 16); ++n) {
      for (std::size_t r = 0; r <= n; ++r) REQUIRE(ball_size_exact(n, q, r) == brute_ball(n, q, r));
    }
  }
  // q^n for large n, exact
  CHECK(ball_size_exact(40, 3, 40) == boost::multiprecision::pow(BigInt(3), 40));
  CHECK_THROWS_AS(ball_size_exact(4, 2, 5), Error);
  CHECK_THROWS_AS(ball_size_exact(1, 2, 0), Error);
}

TEST_CASE("ball enumeration") {
  const auto f3 = Field::of_order(3);
  Rng rng(5);
  const Word c = random_word(f3, 6, rng);
  const auto only = ball_enumerate(c, 0);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == c);
  CHECK(ball_enumerate(c, 6).size() == 729);
  const auto f2 = Field::of_order(2);
  const Word z = Word::zeros(f2, 4);
  CHECK(BigInt(ball_enumerate(z, 2).size()) == ball_size_exact(4, 2, 2));
  const auto ball = ball_enumerate(c, 3);
  std::set<std::vector<Elem>> distinct;
  for (const Word& w : ball) {
    CHECK(pair_distance(w, c) <= 3);
    distinct.insert(std::vector<Elem>(w.symbols().begin(), w.symbols().end()));
  }
  CHECK(distinct.size() == ball.size());
  CHECK(BigInt(ball.size()) == ball_size_exact(6, 3, 3));
  CHECK_THROWS_AS(ball_enumerate(Word::zeros(Field::of_order(256), 4), 1), Error);
}

TEST_CASE("log-domain ball size") {
  CHECK(ball_size_log(5, 2, 0.0) == doctest::Approx(0.0));
  const double exact = std::log2(static_cast<double>(ball_size_exact(5, 2, 3)));
  CHECK(ball_size_log(5, 2, 0.6) == doctest::Approx(exact).epsilon(1e-9));
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (std::size_t n : {6u, 10u, 20u}) {
      for (std::size_t r = 0; r <= n; ++r) {
        const double want = std::log(static_cast<double>(ball_size_exact(n, q, r))) / std::log(double(q));
        CHECK(ball_size_log(n, q, static_cast<double>(r) / n) == doctest::Approx(want).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(ball_size_log(5, 2, 1.5), Error);
}

TEST_CASE("metric axioms on random words") {
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 8}, {5, 6}, {16, 5}, {3, 2}}) {
    const auto f = Field::of_order(q);
    Rng rng(q * 1000 + n);
    for (int t = 0; t < 3000; ++t) {
      const Word x = random_word(f, n, rng), y = random_word(f, n, rng), z = random_word(f, n, rng);
      const std::size_t d = pair_distance(x, y);
      const std::size_t dh = hamming_distance(x, y);
      REQUIRE(d == pair_distance(y, x));
      REQUIRE((d == 0) == (x == y));
      REQUIRE(pair_distance(x, z) <= d + pair_distance(y, z));
      REQUIRE(d == pair_weight(x - y));
      REQUIRE(pair_weight(cyclic_shift(x, t % n)) == pair_weight(x));
      if (dh > 0 && dh < n) {
        REQUIRE(dh + 1 <= d);
        REQUIRE(d <= 2 * dh);
      } else {
        REQUIRE(d == dh);
      }
    }
  }
}

TEST_CASE("cyclic shift and word arithmetic") {
  const auto f5 = Field::of_order(5);
  const Word x = word_of(f5, {1, 2, 3, 4});
  CHECK(cyclic_shift(x, 1) == word_of(f5, {2, 3, 4, 1}));
  CHECK(cyclic_shift(x, 4) == x);
  CHECK(x + x == word_of(f5, {2, 4, 1, 3}));
  CHECK((x - x) == Word::zeros(f5, 4));
  CHECK(hamming_weight(x) == 4);
  CHECK(space_size(2, 70) == UINT64_MAX);
}
