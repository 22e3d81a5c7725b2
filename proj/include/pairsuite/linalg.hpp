#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pairsuite/galois.hpp"

namespace pairsuite {

/// Dense row-major matrix over F_q.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RowEchelon {
  FieldMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Reduced row echelon form. Columns are scanned left to right and the pivot
/// is the first row (from the top of the unreduced block) with a nonzero
/// entry, so the result is a deterministic function of the input.
RowEchelon row_reduce(const Field& f, FieldMatrix m);

/// Basis of {x : A x = 0}, one vector per free column in increasing column
/// order; the vector for free column j has x_j = 1 and zeros at the other
/// free columns.
std::vector<std::vector<Elem>> nullspace_basis(const Field& f, const FieldMatrix& a);

struct AffineSolution {
  std::optional<std::vector<Elem>> particular;  // empty when A x = b is inconsistent
  std::vector<std::vector<Elem>> kernel;
};

/// Solves A x = b; the particular solution has zeros at free columns.
AffineSolution solve_affine(const Field& f, const FieldMatrix& a, std::span<const Elem> b);

std::vector<Elem> mat_vec(const Field& f, const FieldMatrix& a, std::span<const Elem> x);

}  // namespace pairsuite
