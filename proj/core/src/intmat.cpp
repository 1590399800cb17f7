#include "phk/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace phk {

i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::diagonal(const std::vector<i64>& d) {
  IntMat m(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<i64>> rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows.begin()->size());
  IntMat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (int(row.size()) != c) throw std::invalid_argument("ragged row list");
    int j = 0;
    for (i64 x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

IntMat IntMat::mul(const IntMat& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in mul");
  IntMat r(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      i64 aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, b.at(k, j)));
    }
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMat IntMat::negated() const {
  IntMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = checked_sub(0, at(i, j));
  return r;
}

IntMat IntMat::col(int c) const {
  IntMat r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

std::vector<i64> IntMat::col_vec(int c) const {
  std::vector<i64> r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, c);
  return r;
}

IntMat IntMat::scaled(i64 k) const {
  IntMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = checked_mul(k, at(i, j));
  return r;
}

IntMat IntMat::hcat(const IntMat& b) const {
  if (rows_ != b.rows_ && cols_ != 0 && b.cols_ != 0)
    throw std::invalid_argument("row count mismatch in hcat");
  int rr = std::max(rows_, b.rows_);
  IntMat r(rr, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
  return r;
}

std::vector<i64> IntMat::apply(const std::vector<i64>& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<i64> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) r[i] = checked_add(r[i], checked_mul(at(i, j), x[j]));
  return r;
}

bool IntMat::is_zero() const {
  for (i64 x : a_)
    if (x != 0) return false;
  return true;
}

i64 IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  i64 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        i64 num = checked_sub(checked_mul(m.at(i, j), m.at(k, k)), checked_mul(m.at(i, k), m.at(k, j)));
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = m.at(k, k);
  }
  return checked_mul(sign, m.at(n - 1, n - 1));
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

namespace {

struct SnfWork {
  IntMat a, u, v;
  bool track_u = true, track_v = true;

  void row_swap(int i, int j) {
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track_u)
      for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track_v)
      for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_addmul(int dst, int src, i64 k) {  // row dst += k * row src
    if (k == 0) return;
    for (int c = 0; c < a.cols(); ++c)
      if (a.at(src, c) != 0) a.at(dst, c) = checked_add(a.at(dst, c), checked_mul(k, a.at(src, c)));
    if (track_u)
      for (int c = 0; c < u.cols(); ++c)
        if (u.at(src, c) != 0) u.at(dst, c) = checked_add(u.at(dst, c), checked_mul(k, u.at(src, c)));
  }
  void col_addmul(int dst, int src, i64 k) {
    if (k == 0) return;
    for (int r = 0; r < a.rows(); ++r)
      if (a.at(r, src) != 0) a.at(r, dst) = checked_add(a.at(r, dst), checked_mul(k, a.at(r, src)));
    if (track_v)
      for (int r = 0; r < v.rows(); ++r)
        if (v.at(r, src) != 0) v.at(r, dst) = checked_add(v.at(r, dst), checked_mul(k, v.at(r, src)));
  }
  void row_negate(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = checked_sub(0, a.at(i, c));
    if (track_u)
      for (int c = 0; c < u.cols(); ++c) u.at(i, c) = checked_sub(0, u.at(i, c));
  }
};

SnfResult snf_impl(const IntMat& a, bool track_u, bool track_v) {
  SnfWork w{a, track_u ? IntMat::identity(a.rows()) : IntMat(),
            track_v ? IntMat::identity(a.cols()) : IntMat(), track_u, track_v};
  int m = a.rows(), n = a.cols();
  int t = 0;
  int steps = std::min(m, n);
  while (t < steps) {
    // pivot: smallest nonzero magnitude in the trailing block, row-then-column
    // tie-break; magnitude 1 is accepted immediately
    int pr = -1, pc = -1;
    i64 best = 0;
    for (int i = t; i < m && best != 1; ++i)
      for (int j = t; j < n; ++j) {
        i64 x = w.a.at(i, j);
        if (x == 0) continue;
        i64 ax = x < 0 ? -x : x;
        if (pr < 0 || ax < best) {
          best = ax;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
    if (pr < 0) break;  // trailing block is zero
    w.row_swap(t, pr);
    w.col_swap(t, pc);
    if (w.a.at(t, t) < 0) w.row_negate(t);

    bool clean = true;
    for (int i = t + 1; i < m; ++i)
      if (w.a.at(i, t) != 0) { w.row_addmul(i, t, -(w.a.at(i, t) / w.a.at(t, t))); clean &= (w.a.at(i, t) == 0); }
    for (int j = t + 1; j < n; ++j)
      if (w.a.at(t, j) != 0) { w.col_addmul(j, t, -(w.a.at(t, j) / w.a.at(t, t))); clean &= (w.a.at(t, j) == 0); }
    if (!clean) continue;  // remainders survive, re-pick a smaller pivot

    // pivot divides everything it eliminated; enforce divisibility into the block
    i64 p = w.a.at(t, t);
    if (p != 1) {
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j)
          if (w.a.at(i, j) % p != 0) {
            w.row_addmul(t, i, 1);  // bring the offending row in, retry this step
            fixed = true;
          }
      if (fixed) continue;
    }
    ++t;
  }
  return {w.u, w.a, w.v};
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) { return snf_impl(a, true, true); }

std::vector<i64> snf_diagonal(const IntMat& a) {
  SnfResult s = snf_impl(a, false, false);
  std::vector<i64> d;
  for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (s.d.at(i, i) != 0) d.push_back(s.d.at(i, i));
  return d;
}

i64 rank_of(const IntMat& a) { return i64(snf_diagonal(a).size()); }

IntMat column_span_basis(const IntMat& gens) {
  // u a v = d  =>  a v = u^{-1} d, so for j < rank the columns of a*v are
  // d_j * (j-th column of u^{-1}): a basis of span(a).
  SnfResult s = snf_impl(gens, false, true);
  int lim = std::min(s.d.rows(), s.d.cols());
  int r = 0;
  for (int i = 0; i < lim; ++i)
    if (s.d.at(i, i) != 0) ++r;
  IntMat av = gens.mul(s.v);
  IntMat basis(gens.rows(), r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < gens.rows(); ++i) basis.at(i, j) = av.at(i, j);
  return basis;
}

IntMat kernel_basis(const IntMat& a) {
  SnfResult s = snf_impl(a, false, true);
  int lim = std::min(s.d.rows(), s.d.cols());
  int r = 0;
  for (int i = 0; i < lim; ++i)
    if (s.d.at(i, i) != 0) ++r;
  // a * v e_j = u^{-1} d e_j = 0 for j >= r
  int k = a.cols() - r;
  IntMat basis(a.cols(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < a.cols(); ++i) basis.at(i, j) = s.v.at(i, r + j);
  return basis;
}

IntMat mod_kernel_basis(const IntMat& a, i64 m) {
  if (m <= 0) throw std::invalid_argument("mod_kernel_basis: modulus must be positive");
  // a x = 0 (mod m)  <=>  d (v^{-1} x) = 0 (mod m)  since u preserves m Z^rows.
  // With y = v^{-1} x the solutions are y_i in (m / gcd(d_i, m)) Z for i < rank
  // and free beyond; a basis is v * diag(c_i).
  SnfResult s = snf_impl(a, false, true);
  int n = a.cols();
  int lim = std::min(s.d.rows(), s.d.cols());
  std::vector<i64> scale(n, 1);
  for (int i = 0; i < lim; ++i)
    if (s.d.at(i, i) != 0) scale[i] = m / gcd_i64(s.d.at(i, i), m);
  IntMat basis(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = checked_mul(s.v.at(i, j), scale[j]);
  return basis;
}

IntMat preimage_basis(const IntMat& a, const IntMat& lat) {
  if (lat.cols() == 0) return kernel_basis(a);
  // solutions of [a | -lat] (x; y) = 0, projected to x
  IntMat blk = a.hcat(lat.negated());
  IntMat ker = kernel_basis(blk);
  IntMat proj(a.cols(), ker.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < ker.cols(); ++j) proj.at(i, j) = ker.at(i, j);
  return column_span_basis(proj);
}

bool solve_in_span(const IntMat& basis, const IntMat& targets, IntMat* coeffs) {
  // basis = u^{-1} d v^{-1}  =>  basis x = t  <=>  d (v^{-1} x) = u t
  SnfResult s = smith_normal_form(basis);
  IntMat ut = s.u.mul(targets);
  int r = 0;
  int lim = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i < lim; ++i)
    if (s.d.at(i, i) != 0) ++r;
  IntMat y(basis.cols(), targets.cols());
  for (int c = 0; c < targets.cols(); ++c) {
    for (int i = 0; i < basis.rows(); ++i) {
      i64 rhs = ut.at(i, c);
      if (i < r) {
        if (rhs % s.d.at(i, i) != 0) return false;
        if (i < basis.cols()) y.at(i, c) = rhs / s.d.at(i, i);
      } else if (rhs != 0) {
        return false;
      }
    }
  }
  if (coeffs) *coeffs = s.v.mul(y);
  return true;
}

bool lattice_contains(const IntMat& basis, const std::vector<i64>& x) {
  IntMat t(int(x.size()), 1);
  for (int i = 0; i < int(x.size()); ++i) t.at(i, 0) = x[i];
  return solve_in_span(basis, t, nullptr);
}

}  // namespace phk
