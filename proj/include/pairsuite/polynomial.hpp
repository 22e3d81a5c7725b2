#pragma once

#include <span>
#include <vector>

#include "pairsuite/galois.hpp"

namespace pairsuite {

/// Dense univariate polynomial over F_q, coefficients in ascending degree
/// order. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Elem> coeffs);

  static Polynomial monomial(FieldPtr field, Elem coeff, std::size_t degree);
  /// prod_i (x - root_i)
  static Polynomial from_roots(FieldPtr field, std::span<const Elem> roots);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }

  /// Horner evaluation.
  Elem operator()(Elem x) const noexcept;

  /// Coefficients padded with zeros to `length` (length >= size required).
  std::vector<Elem> padded(std::size_t length) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(Elem c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() noexcept;

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Remainder and gcd over F_q on raw ascending coefficient vectors (trimmed).
std::vector<Elem> poly_mod(const Field& f, std::vector<Elem> a, const std::vector<Elem>& b);
std::vector<Elem> poly_gcd(const Field& f, std::vector<Elem> a, std::vector<Elem> b);

}  // namespace pairsuite
