#include "pairsuite/linalg.hpp"

#include <algorithm>

namespace pairsuite {

RowEchelon row_reduce(const Field& f, FieldMatrix m) {
  RowEchelon out{std::move(m), {}};
  FieldMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a(sel, col).value == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      auto r1 = a.row(sel);
      auto r2 = a.row(pivot_row);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const Elem inv = f.inv(a(pivot_row, col));
    for (Elem& x : a.row(pivot_row)) x = f.mul(x, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      const Elem factor = a(r, col);
      if (factor.value == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(pivot_row, c)));
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return out;
}

namespace {

std::vector<std::vector<Elem>> kernel_from_rref(const Field& f, const RowEchelon& ech, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(ncols, Elem{0});
    v[free] = f.one();
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = f.neg(ech.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Elem>> nullspace_basis(const Field& f, const FieldMatrix& a) {
  return kernel_from_rref(f, row_reduce(f, a), a.cols());
}

AffineSolution solve_affine(const Field& f, const FieldMatrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) fail(ErrorCode::kLengthMismatch, "right-hand side length");
  FieldMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon ech = row_reduce(f, std::move(aug));

  AffineSolution out;
  const bool inconsistent = !ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols();
  if (inconsistent) ech.pivot_cols.pop_back();
  out.kernel = kernel_from_rref(f, ech, a.cols());
  if (!inconsistent) {
    std::vector<Elem> x(a.cols(), Elem{0});
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) x[ech.pivot_cols[i]] = ech.reduced(i, a.cols());
    out.particular = std::move(x);
  }
  return out;
}

std::vector<Elem> mat_vec(const Field& f, const FieldMatrix& a, std::span<const Elem> x) {
  if (x.size() != a.cols()) fail(ErrorCode::kLengthMismatch, "vector length");
  std::vector<Elem> out(a.rows(), Elem{0});
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Elem acc{0};
    for (std::size_t c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(a(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

}  // namespace pairsuite
