#include "phk/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace phk {

i64 FinAb::order() const {
  if (rank != 0) throw std::logic_error("order() of an infinite group");
  i64 n = 1;
  for (i64 d : factors) n = checked_mul(n, d);
  return n;
}

std::string FinAb::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (i64 d : factors) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

FinAb FinAb::cyclic(i64 n) {
  if (n <= 0) throw std::invalid_argument("cyclic order must be positive");
  if (n == 1) return {};
  return {{n}, 0};
}

FinAb FinAb::direct_sum(const FinAb& o) const {
  std::vector<i64> all = factors;
  all.insert(all.end(), o.factors.begin(), o.factors.end());
  return fin_ab_from_orders(all, rank + o.rank);
}

FinAb FinAb::tensor_zm(i64 m) const {
  std::vector<i64> orders;
  for (i64 d : factors) orders.push_back(gcd_i64(d, m));
  for (int i = 0; i < rank; ++i) orders.push_back(m);
  return fin_ab_from_orders(orders, 0);
}

IntMat FinAb::relations() const {
  int n = ngens();
  IntMat r(n, int(factors.size()));
  for (int j = 0; j < int(factors.size()); ++j) r.at(j, j) = factors[j];
  return r;
}

FinAb fin_ab_from_orders(const std::vector<i64>& orders, int rank) {
  // prime-power decomposition, then re-assemble the divisibility chain
  std::map<i64, std::vector<int>> ppowers;  // prime -> exponents, descending later
  for (i64 d : orders) {
    if (d < 0) d = -d;
    if (d <= 1) continue;
    for (i64 p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        int e = 0;
        while (d % p == 0) { d /= p; ++e; }
        ppowers[p].push_back(e);
      }
    }
    if (d > 1) ppowers[d].push_back(1);
  }
  size_t chain = 0;
  for (auto& [p, es] : ppowers) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    chain = std::max(chain, es.size());
  }
  std::vector<i64> factors(chain, 1);
  for (auto& [p, es] : ppowers)
    for (size_t i = 0; i < es.size(); ++i) {
      i64 q = 1;
      for (int k = 0; k < es[i]; ++k) q = checked_mul(q, p);
      factors[i] = checked_mul(factors[i], q);
    }
  // factors currently descending; invariant-factor convention is ascending
  std::sort(factors.begin(), factors.end());
  return {factors, rank};
}

std::vector<i64> Subquotient::k_coords(const std::vector<i64>& x) const {
  IntMat t(int(x.size()), 1);
  for (int i = 0; i < int(x.size()); ++i) t.at(i, 0) = x[i];
  IntMat c;
  if (!solve_in_span(ambient_k, t, &c)) throw std::logic_error("vector not in subquotient's K lattice");
  return c.col_vec(0);
}

Subquotient subquotient(const IntMat& k_basis, const IntMat& i_gens) {
  Subquotient s;
  s.ambient_k = k_basis;
  s.ambient_i = i_gens;
  if (k_basis.cols() == 0) {
    s.group = FinAb::trivial();
    return s;
  }
  IntMat coeffs;
  if (!solve_in_span(k_basis, i_gens, &coeffs))
    throw std::logic_error("subquotient: I not contained in K");
  std::vector<i64> d = snf_diagonal(coeffs);
  std::vector<i64> torsion;
  for (i64 x : d)
    if (x != 1) torsion.push_back(x);
  int rank = k_basis.cols() - int(d.size());
  s.group = fin_ab_from_orders(torsion, rank);
  return s;
}

Subquotient homology_at(const IntMat& f, const IntMat& rel_b,
                        const IntMat& g, const IntMat& rel_c) {
  IntMat k = preimage_basis(g, rel_c);
  IntMat i = f.hcat(rel_b);
  return subquotient(k, column_span_basis(i));
}

IntMat induced_map(const Subquotient& a, const Subquotient& b, const IntMat& f) {
  IntMat coeffs(b.ambient_k.cols(), a.ambient_k.cols());
  if (a.ambient_k.cols() == 0) return coeffs;
  IntMat fk = f.mul(a.ambient_k);
  if (b.ambient_k.cols() == 0) {
    if (!fk.is_zero()) throw std::logic_error("induced_map: image leaves the target K lattice");
    return coeffs;
  }
  if (!solve_in_span(b.ambient_k, fk, &coeffs))
    throw std::logic_error("induced_map: image leaves the target K lattice");
  if (a.ambient_i.cols() > 0) {
    IntMat fi = f.mul(a.ambient_i);
    if (!fi.is_zero()) {
      IntMat span_ib = column_span_basis(b.ambient_i);
      IntMat c2;
      if (span_ib.cols() == 0 || !solve_in_span(span_ib, fi, &c2))
        throw std::logic_error("induced_map: f(I) not contained in target I");
    }
  }
  return coeffs;
}

bool induced_iso(const Subquotient& a, const Subquotient& b, const IntMat& f) {
  if (!(a.group == b.group)) return false;
  if (!a.group.is_finite()) throw std::logic_error("induced_iso: only finite groups supported");
  // finite groups of equal type: surjectivity implies bijectivity.
  // surjective iff f(K_a) + I_b spans K_b.
  if (b.ambient_k.cols() == 0) return true;
  IntMat gen = f.mul(a.ambient_k).hcat(b.ambient_i);
  IntMat span = column_span_basis(gen);
  if (span.cols() == 0) return false;
  IntMat coeffs;
  return solve_in_span(span, b.ambient_k, &coeffs);
}

Subquotient induced_image(const Subquotient& a, const Subquotient& b, const IntMat& f) {
  IntMat gen = f.mul(a.ambient_k).hcat(b.ambient_i);
  return subquotient(column_span_basis(gen), b.ambient_i);
}

NormalForm normal_form(const Subquotient& s) {
  int k = s.ambient_k.cols();
  NormalForm nf;
  nf.group = s.group;
  if (k == 0) {
    nf.proj = IntMat(0, 0);
    nf.section = IntMat(0, 0);
    return nf;
  }
  IntMat coeffs;
  if (!solve_in_span(s.ambient_k, s.ambient_i, &coeffs))
    throw std::logic_error("normal_form: I not contained in K");
  SnfResult snf = smith_normal_form(coeffs);
  // u * coeffs * v = d: in coordinates y = u x the relations are diagonal.
  // keep rows with d_i != 1: torsion gens (d_i >= 2) then free gens (past rank)
  SnfResult su = smith_normal_form(snf.u);
  IntMat uinv = su.v.mul(su.u);
  int lim = std::min(snf.d.rows(), snf.d.cols());
  std::vector<int> keep;
  for (int i = 0; i < lim; ++i)
    if (snf.d.at(i, i) != 1) keep.push_back(i);
  for (int i = lim; i < k; ++i) keep.push_back(i);
  int g = int(keep.size());
  nf.proj = IntMat(g, k);
  nf.section = IntMat(k, g);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < k; ++c) {
      nf.proj.at(r, c) = snf.u.at(keep[r], c);
      nf.section.at(c, r) = uinv.at(c, keep[r]);
    }
  if (g != nf.group.ngens()) throw std::logic_error("normal_form: generator count mismatch");
  return nf;
}

IntMat induced_map_normal(const Subquotient& a, const NormalForm& na,
                          const Subquotient& b, const NormalForm& nb, const IntMat& f) {
  IntMat fk = induced_map(a, b, f);
  return nb.proj.mul(fk).mul(na.section);
}

std::vector<i64> reduce_coords(const FinAb& g, const std::vector<i64>& x) {
  std::vector<i64> r = x;
  for (size_t i = 0; i < g.factors.size(); ++i) r[i] = mod_floor(r[i], g.factors[i]);
  return r;
}

}  // namespace phk
