#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pairsuite/error.hpp"

namespace pairsuite {

/// Canonical encoding of an element of F_q as an integer in [0, q).
/// Prime fields: the residue. Extension fields: sum_i c_i p^i where c_i are
/// the coordinates on the polynomial basis 1, X, ..., X^{e-1}.
struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}
  constexpr auto operator<=>(const Elem&) const = default;
};

/// Finite field F_q with q = p^e <= 2^16.
///
/// Immutable after construction. The primitive element and, for e > 1, the
/// irreducibility of the modulus are verified when the field is built.
/// Prime fields multiply by modular reduction; extension fields through
/// log/antilog tables keyed to the primitive element.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  /// Builds F_{p^e}. Throws kNonPrimeCharacteristic or kOrderTooLarge.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e = 1);

  /// Builds the field of order q, factoring q = p^e. Throws
  /// kNonPrimeCharacteristic when q is not a prime power.
  static std::shared_ptr<const Field> of_order(std::uint64_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Monic modulus, ascending coefficients, size e + 1. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// True when the modulus came from the built-in Conway table.
  bool conway_modulus() const noexcept { return conway_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem primitive() const noexcept { return gamma_; }

  /// Checked conversion from the integer encoding.
  Elem element(std::uint64_t encoded) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;  // kDivisionByZero on 0
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t exponent) const noexcept;

  /// gamma^j for any j (reduced mod q - 1).
  Elem exp(std::uint64_t j) const noexcept { return Elem{antilog_[j % (q_ - 1)]}; }
  /// Discrete log base gamma; kDivisionByZero on 0.
  std::uint32_t log(Elem a) const;

  /// Fields are identified by (p, e); construction is deterministic so any
  /// two instances with equal order are the same field.
  bool same_as(const Field& other) const noexcept { return p_ == other.p_ && e_ == other.e_; }
  void require_same(const Field& other) const;

  std::string name() const;

 private:
  Field(std::uint32_t p, std::uint32_t e);

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  bool conway_ = false;
  std::vector<std::uint32_t> modulus_;
  Elem gamma_;
  std::vector<std::uint32_t> antilog_;  // size 2(q - 1)
  std::vector<std::uint32_t> log_;      // size q, log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

/// Field element bound to its field, with operator syntax. Arithmetic between
/// elements of different fields throws kFieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  FieldElement(FieldPtr field, std::uint64_t encoded);

  const FieldPtr& field() const noexcept { return field_; }
  Elem raw() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.value == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

/// L = F_q[X] / (X^{q-1} - gamma), a field of degree q - 1 over F_q.
/// Elements are coefficient vectors of length q - 1 on 1, X, ..., X^{q-2}.
class BigField {
 public:
  using Element = std::vector<Elem>;

  /// Requires q >= 3. Runs the Rabin irreducibility test on X^{q-1} - gamma
  /// and throws kReducibleModulus if it fails.
  explicit BigField(FieldPtr base);

  const FieldPtr& base() const noexcept { return base_; }
  std::size_t dimension() const noexcept { return dim_; }

  Element zero() const { return Element(dim_, Elem{0}); }
  Element one() const;
  Element constant(Elem c) const;
  /// Class of X.
  Element generator() const;
  /// Reduces an arbitrary-length coefficient vector modulo X^{q-1} - gamma.
  Element reduce(const std::vector<Elem>& coeffs) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(Elem c, const Element& a) const;
  /// Schoolbook product followed by X^{q-1} = gamma folding.
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t exponent) const;

  /// z -> z^q. Diagonal on the monomial basis: c_j X^j -> c_j gamma^j X^j.
  Element frobenius(const Element& z) const;

  bool is_zero(const Element& a) const noexcept;

 private:
  FieldPtr base_;
  std::size_t dim_;
};

}  // namespace pairsuite
