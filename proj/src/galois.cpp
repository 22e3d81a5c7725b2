#include "pairsuite/galois.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "pairsuite/polynomial.hpp"

namespace pairsuite {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kLengthTooShort: return "LengthTooShort";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kSizeTooLarge: return "SizeTooLarge";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kRadiusNonpositive: return "RadiusNonpositive";
    case ErrorCode::kParameterError: return "ParameterError";
    case ErrorCode::kNoSolution: return "NoSolution";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Conway polynomials, ascending coefficients, monic. X is primitive for each.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

// Polynomials over Z_p with small integer coefficients. Only used while
// choosing the modulus, before any field object exists.
using ZpPoly = std::vector<std::uint32_t>;

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::uint32_t p) {
  zp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = [&] {
    std::uint64_t r = 1, base = m.back(), ex = p - 2;
    while (ex) {
      if (ex & 1) r = r * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    return r;
  }();
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * m[i]) % p);
    }
    zp_trim(a);
  }
  return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return zp_mod(std::move(prod), m, p);
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t ex, const ZpPoly& m, std::uint32_t p) {
  ZpPoly result{1};
  base = zp_mod(std::move(base), m, p);
  while (ex) {
    if (ex & 1) result = zp_mulmod(result, base, m, p);
    base = zp_mulmod(base, base, m, p);
    ex >>= 1;
  }
  return result;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin: monic f of degree e is irreducible over F_p iff x^{p^e} = x mod f and
// gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e.
bool zp_irreducible(const ZpPoly& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  if (f[0] == 0) return false;
  auto x_pow_p_pow = [&](std::uint32_t j) {
    ZpPoly h{0, 1};
    for (std::uint32_t i = 0; i < j; ++i) h = zp_powmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](ZpPoly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    zp_trim(h);
    return h;
  };
  if (!minus_x(x_pow_p_pow(e)).empty()) return false;
  for (std::uint64_t r : prime_factors(e)) {
    ZpPoly g = zp_gcd(minus_x(x_pow_p_pow(e / static_cast<std::uint32_t>(r))), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

ZpPoly first_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  // Lower coefficients enumerated as the integer sum_i c_i p^i, ascending.
  for (std::uint64_t t = 0; t < q; ++t) {
    ZpPoly f(e + 1, 0);
    std::uint64_t v = t;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (zp_irreducible(f, p)) return f;
  }
  fail(ErrorCode::kReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;

  if (e > 1) {
    auto it = conway_table().find({p, e});
    if (it != conway_table().end() && zp_irreducible(it->second, p)) {
      modulus_ = it->second;
      conway_ = true;
    } else {
      modulus_ = first_irreducible(p, e);
    }
  }

  // Multiplication on encodings via the modulus; only used to seed the tables.
  auto digits = [&](std::uint32_t v) {
    ZpPoly d(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  };
  auto encode = [&](const ZpPoly& d) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  };
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    return encode(zp_mulmod(digits(a), digits(b), modulus_, p_));
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t ex) {
    std::uint32_t r = 1;
    while (ex) {
      if (ex & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      ex >>= 1;
    }
    return r;
  };

  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto is_generator = [&](std::uint32_t g) {
    if (g == 0) return false;
    if (slow_pow(g, group) != 1) return false;
    return std::all_of(factors.begin(), factors.end(),
                       [&](std::uint64_t r) { return slow_pow(g, group / r) != 1; });
  };

  std::uint32_t gamma = 0;
  if (conway_ && is_generator(p_)) {
    gamma = p_;  // encoding of X
  } else {
    for (std::uint32_t g = 1; g < q_; ++g) {
      if (is_generator(g)) {
        gamma = g;
        break;
      }
    }
  }
  if (gamma == 0) fail(ErrorCode::kReducibleModulus, "no primitive element in " + name());
  gamma_ = Elem{gamma};

  antilog_.assign(2 * group, 0);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t j = 0; j < group; ++j) {
    antilog_[j] = cur;
    antilog_[j + group] = cur;
    log_[cur] = static_cast<std::uint32_t>(j);
    cur = slow_mul(cur, gamma);
  }
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorCode::kDomainError, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::kOrderTooLarge, "field order exceeds 2^16");
  }
  return std::shared_ptr<const Field>(new Field(p, e));
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  if (q > kMaxOrder) fail(ErrorCode::kOrderTooLarge, "field order exceeds 2^16");
  const auto factors = prime_factors(q);
  if (q < 2 || factors.size() != 1)
    fail(ErrorCode::kNonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  std::uint32_t e = 0;
  for (std::uint64_t v = q; v > 1; v /= factors[0]) ++e;
  return make(static_cast<std::uint32_t>(factors[0]), e);
}

Elem Field::element(std::uint64_t encoded) const {
  if (encoded >= q_) fail(ErrorCode::kDomainError, std::to_string(encoded) + " is not an element of " + name());
  return Elem{static_cast<std::uint32_t>(encoded)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (e_ == 1) {
    std::uint32_t s = a.value + b.value;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Elem{a.value ^ b.value};
  std::uint32_t x = a.value, y = b.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const noexcept {
  if (e_ == 1) return Elem{a.value == 0 ? 0 : p_ - a.value};
  if (p_ == 2) return a;
  std::uint32_t x = a.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a.value == 0 || b.value == 0) return Elem{0};
  if (e_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  return Elem{antilog_[log_[a.value] + log_[b.value]]};
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero in " + name());
  const std::uint32_t l = log_[a.value];
  return Elem{antilog_[l == 0 ? 0 : (q_ - 1) - l]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t exponent) const noexcept {
  if (exponent == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t l = (std::uint64_t{log_[a.value]} * (exponent % (q_ - 1))) % (q_ - 1);
  return Elem{antilog_[l]};
}

std::uint32_t Field::log(Elem a) const {
  if (a.value == 0) fail(ErrorCode::kDivisionByZero, "log of zero in " + name());
  return log_[a.value];
}

void Field::require_same(const Field& other) const {
  if (!same_as(other)) fail(ErrorCode::kFieldMismatch, name() + " vs " + other.name());
}

std::string Field::name() const {
  if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
}

// FieldElement ----------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  field_->element(value_.value);
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t encoded)
    : field_(std::move(field)), value_(field_->element(encoded)) {}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  a.field_->require_same(*b.field_);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  a.field_->require_same(*b.field_);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.field_->require_same(*b.field_);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  a.field_->require_same(*b.field_);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t exponent) const { return {field_, field_->pow(value_, exponent)}; }

// BigField --------------------------------------------------------------------

BigField::BigField(FieldPtr base) : base_(std::move(base)), dim_(0) {
  const Field& f = *base_;
  if (f.order() < 3) fail(ErrorCode::kDomainError, "big field needs q >= 3");
  dim_ = f.order() - 1;

  // Rabin's test for X^{t} - gamma, t = q - 1. The q-power map is a ring
  // endomorphism of F_q[X]/(X^t - gamma) and X^q = gamma X there, so
  // X^{q^j} is obtained by iterating frobenius() on the class of X.
  std::vector<Elem> modulus(dim_ + 1, Elem{0});
  modulus[0] = f.neg(f.primitive());
  modulus[dim_] = f.one();

  auto minus_x = [&](Element h) {
    h[1] = f.sub(h[1], f.one());
    return h;
  };
  auto frob_iter = [&](std::size_t j) {
    Element h = generator();
    for (std::size_t i = 0; i < j; ++i) h = frobenius(h);
    return h;
  };

  if (!is_zero(minus_x(frob_iter(dim_))))
    fail(ErrorCode::kReducibleModulus, "X^{q-1} - gamma fails the Frobenius identity");
  for (std::uint64_t r : prime_factors(dim_)) {
    Element h = minus_x(frob_iter(dim_ / r));
    std::vector<Elem> g = poly_gcd(f, h, modulus);
    if (g.size() != 1) fail(ErrorCode::kReducibleModulus, "X^{q-1} - gamma has a factor of degree dividing " +
                                                              std::to_string(dim_ / r));
  }
}

BigField::Element BigField::one() const { return constant(base_->one()); }

BigField::Element BigField::constant(Elem c) const {
  Element out = zero();
  out[0] = c;
  return out;
}

BigField::Element BigField::generator() const {
  Element out = zero();
  out[1] = base_->one();
  return out;
}

BigField::Element BigField::reduce(const std::vector<Elem>& coeffs) const {
  const Field& f = *base_;
  Element out = zero();
  // X^{a (q-1) + j} = gamma^a X^j
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].value == 0) continue;
    const std::size_t j = i % dim_;
    const std::size_t wraps = i / dim_;
    out[j] = f.add(out[j], f.mul(coeffs[i], f.exp(wraps)));
  }
  return out;
}

BigField::Element BigField::add(const Element& a, const Element& b) const {
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = base_->add(a[i], b[i]);
  return out;
}

BigField::Element BigField::sub(const Element& a, const Element& b) const {
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = base_->sub(a[i], b[i]);
  return out;
}

BigField::Element BigField::scale(Elem c, const Element& a) const {
  Element out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = base_->mul(c, a[i]);
  return out;
}

BigField::Element BigField::mul(const Element& a, const Element& b) const {
  const Field& f = *base_;
  std::vector<Elem> prod(2 * dim_ - 1, Elem{0});
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].value == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].value == 0) continue;
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  Element out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(dim_));
  for (std::size_t i = dim_; i < prod.size(); ++i)
    out[i - dim_] = f.add(out[i - dim_], f.mul(prod[i], f.primitive()));
  return out;
}

BigField::Element BigField::pow(const Element& a, std::uint64_t exponent) const {
  Element result = one();
  Element base = a;
  while (exponent) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

BigField::Element BigField::frobenius(const Element& z) const {
  Element out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) out[j] = base_->mul(z[j], base_->exp(j));
  return out;
}

bool BigField::is_zero(const Element& a) const noexcept {
  return std::all_of(a.begin(), a.end(), [](Elem c) { return c.value == 0; });
}

}  // namespace pairsuite
