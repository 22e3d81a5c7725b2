#include "pairsuite/polynomial.hpp"

#include <algorithm>

namespace pairsuite {

namespace {

void trim_raw(std::vector<Elem>& c) {
  while (!c.empty() && c.back().value == 0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) field_->element(c.value);
  trim();
}

Polynomial Polynomial::monomial(FieldPtr field, Elem coeff, std::size_t degree) {
  std::vector<Elem> c(degree + 1, Elem{0});
  c[degree] = coeff;
  return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::from_roots(FieldPtr field, std::span<const Elem> roots) {
  const Field& f = *field;
  std::vector<Elem> c{f.one()};
  for (Elem r : roots) {
    // c(x) * (x - r)
    std::vector<Elem> next(c.size() + 1, Elem{0});
    const Elem minus_r = f.neg(r);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], c[i]);
      next[i] = f.add(next[i], f.mul(c[i], minus_r));
    }
    c = std::move(next);
  }
  return Polynomial(std::move(field), std::move(c));
}

Elem Polynomial::operator()(Elem x) const noexcept {
  const Field& f = *field_;
  Elem acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

std::vector<Elem> Polynomial::padded(std::size_t length) const {
  std::vector<Elem> out = coeffs_;
  if (out.size() < length) out.resize(length, Elem{0});
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.field_->require_same(*b.field_);
  const Field& f = *a.field_;
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Elem{0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.field_->require_same(*b.field_);
  const Field& f = *a.field_;
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Elem{0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.field_->require_same(*b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const Field& f = *a.field_;
  std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, Elem{0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return Polynomial(a.field_, std::move(c));
}

Polynomial Polynomial::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(c, coeffs_[i]);
  return Polynomial(field_, std::move(out));
}

void Polynomial::trim() noexcept { trim_raw(coeffs_); }

std::vector<Elem> poly_mod(const Field& f, std::vector<Elem> a, const std::vector<Elem>& b) {
  trim_raw(a);
  std::vector<Elem> m = b;
  trim_raw(m);
  if (m.empty()) fail(ErrorCode::kDivisionByZero, "polynomial remainder by zero");
  const Elem lead_inv = f.inv(m.back());
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const Elem factor = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    trim_raw(a);
  }
  return a;
}

std::vector<Elem> poly_gcd(const Field& f, std::vector<Elem> a, std::vector<Elem> b) {
  trim_raw(a);
  trim_raw(b);
  while (!b.empty()) {
    std::vector<Elem> r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem lead_inv = f.inv(a.back());
    for (Elem& c : a) c = f.mul(c, lead_inv);
  }
  return a;
}

}  // namespace pairsuite
