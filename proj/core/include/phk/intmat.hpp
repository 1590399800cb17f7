#pragma once

// Dense exact integer matrices and Smith normal form, the linear-algebra
// kernel behind every homology computation in this library.  All arithmetic
// is overflow-checked 64-bit; an overflow throws instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phk {

using i64 = std::int64_t;

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("integer overflow in exact arithmetic") {}
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

// Nonnegative gcd.
i64 gcd_i64(i64 a, i64 b);

// Euclidean remainder in [0, m) for m > 0.
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), 0) {}

  static IntMat identity(int n);
  static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
  static IntMat diagonal(const std::vector<i64>& d);
  static IntMat from_rows(std::initializer_list<std::initializer_list<i64>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  i64& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  i64 at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  IntMat mul(const IntMat& b) const;
  IntMat transpose() const;
  IntMat negated() const;
  IntMat col(int c) const;
  std::vector<i64> col_vec(int c) const;
  IntMat scaled(i64 k) const;

  // Concatenate columns [this | b]; row counts must match.
  IntMat hcat(const IntMat& b) const;

  // Matrix-vector product.
  std::vector<i64> apply(const std::vector<i64>& x) const;

  bool is_zero() const;
  bool operator==(const IntMat& o) const = default;

  // Exact determinant (square matrices), Bareiss fraction-free elimination.
  i64 det() const;

  std::string to_string() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<i64> a_;
};

struct SnfResult {
  IntMat u, d, v;  // u * a * v == d, u and v unimodular, d diagonal with d_i | d_{i+1}
};

// Smith normal form with transforms.  Pivot choice: smallest nonzero
// magnitude, ties broken by row then column index, so u, v are reproducible.
SnfResult smith_normal_form(const IntMat& a);

// Nonzero diagonal entries of the Smith form (all positive, divisibility chain).
std::vector<i64> snf_diagonal(const IntMat& a);

i64 rank_of(const IntMat& a);

// --- Lattices -------------------------------------------------------------
//
// A lattice is the set of integer combinations of the columns of a matrix.

// Basis (full column rank) of the integer column span of `gens`.
IntMat column_span_basis(const IntMat& gens);

// Basis of { x : a x = 0 }.
IntMat kernel_basis(const IntMat& a);

// Full-rank basis of { x : a x = 0 (mod m) }; avoids forming block matrices.
IntMat mod_kernel_basis(const IntMat& a, i64 m);

// Basis of { x : a x lies in the column span of `lat` }.
IntMat preimage_basis(const IntMat& a, const IntMat& lat);

// Solve basis * coeffs = targets exactly; returns false if some target
// column is not in the lattice.  `basis` must have full column rank.
bool solve_in_span(const IntMat& basis, const IntMat& targets, IntMat* coeffs);

// Membership test for a single vector.
bool lattice_contains(const IntMat& basis, const std::vector<i64>& x);

}  // namespace phk
