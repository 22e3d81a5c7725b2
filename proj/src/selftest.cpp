#include "pairsuite/selftest.hpp"

#include <functional>
#include <string>
#include <vector>

#include "pairsuite/experiments.hpp"
#include "pairsuite/pair_list_decoder.hpp"
#include "pairsuite/pair_metric.hpp"
#include "pairsuite/random.hpp"
#include "pairsuite/rs_codes.hpp"

namespace pairsuite {

namespace {

struct Suite {
  std::string name;
  std::function<std::string()> run;  // empty string on success, else a failure note
};

Word random_word(const FieldPtr& f, std::size_t n, Rng& rng) {
  std::vector<Elem> s(n);
  for (Elem& e : s) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, f->order()))};
  return Word(f, std::move(s));
}

std::string ball_suite(SelfTestFault fault) {
  const BallCorrection corr =
      fault == SelfTestFault::kBallCorrection ? BallCorrection::kNone : BallCorrection::kFullWeight;
  const std::vector<std::pair<std::uint64_t, std::size_t>> cases = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                                    {3, 2}, {3, 3}, {3, 4}, {4, 3}};
  for (auto [q, n] : cases) {
    const auto f = Field::of_order(q);
    const Word center = Word::zeros(f, n);
    for (std::size_t r = 0; r <= n; ++r) {
      std::size_t count = 0;
      for_each_in_ball(*f, center.symbols(), r, [&](std::span<const Elem>) { ++count; });
      if (ball_size_exact(n, q, r, corr) != count)
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
    }
  }
  return {};
}

std::string metric_suite() {
  Rng rng(20240601);
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 8}, {5, 6}}) {
    const auto f = Field::of_order(q);
    for (int t = 0; t < 2000; ++t) {
      const Word x = random_word(f, n, rng), y = random_word(f, n, rng), z = random_word(f, n, rng);
      const std::size_t dxy = pair_distance(x, y);
      const std::size_t dh = hamming_distance(x, y);
      if (dxy != pair_distance(y, x)) return "symmetry";
      if ((dxy == 0) != (x == y)) return "identity";
      if (pair_distance(x, z) > dxy + pair_distance(y, z)) return "triangle";
      if (dxy != pair_weight(x - y)) return "translation";
      if (pair_weight(cyclic_shift(x, 1)) != pair_weight(x)) return "shift";
      if (dh > 0 && dh < n && (dxy < dh + 1 || dxy > 2 * dh)) return "sandwich";
      if ((dh == 0 || dh == n) && dxy != dh) return "extremes";
    }
  }
  return {};
}

std::string decoder_suite() {
  const auto f = Field::of_order(8);
  const CodeSpec spec(f, 7, 2);
  const std::size_t radius = decode_radius(spec);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elem> msg{Elem{static_cast<std::uint32_t>(uniform_below(rng, 8))},
                          Elem{static_cast<std::uint32_t>(uniform_below(rng, 8))}};
    const Polynomial p = message_polynomial(spec, msg);
    const Word y = inject_pair_errors(rs_encode(spec, p), radius, rng);
    const DecodeResult got = list_decode(spec, y);
    const auto want = exhaustive_decode(spec, y, radius);
    if (got.candidates.size() != want.size()) return "list size differs at trial " + std::to_string(t);
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!(got.candidates[i].message == want[i].message)) return "list differs at trial " + std::to_string(t);
    }
    if (!got.contains(p)) return "transmitted message missing at trial " + std::to_string(t);
  }
  return {};
}

std::string double_count_suite() {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const std::uint64_t q = 2 + i % 2;
    const std::size_t n = q == 2 ? 8 : 5;
    const RandomCode code = sample_random_code(q, n, 0.4, derive_seed(99, i));
    for (std::size_t r : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3}, n}) {
      if (!double_counting_check(code, r)) return "code " + std::to_string(i) + " radius " + std::to_string(r);
    }
  }
  return {};
}

}  // namespace

std::vector<SuiteOutcome> selftest_suites(SelfTestFault fault) {
  const std::vector<Suite> suites = {
      {"ball-size-vs-enumeration", [fault] { return ball_suite(fault); }},
      {"metric-axioms", metric_suite},
      {"decoder-vs-exhaustive", decoder_suite},
      {"double-counting", double_count_suite},
  };
  std::vector<SuiteOutcome> out;
  for (const Suite& s : suites) {
    SuiteOutcome o{s.name, false, {}};
    try {
      o.note = s.run();
    } catch (const std::exception& e) {
      o.note = std::string("exception: ") + e.what();
    }
    o.passed = o.note.empty();
    out.push_back(std::move(o));
  }
  return out;
}

bool run_selftest(std::ostream& out, SelfTestFault fault) {
  bool all = true;
  for (const SuiteOutcome& o : selftest_suites(fault)) {
    all = all && o.passed;
    out << (o.passed ? "PASS " : "FAIL ") << o.name;
    if (!o.passed) out << " (" << o.note << ")";
    out << '\n';
  }
  out << (all ? "selftest: all suites passed" : "selftest: FAILED") << '\n';
  return all;
}

}  // namespace pairsuite
