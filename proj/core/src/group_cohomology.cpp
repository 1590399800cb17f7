#include "phk/group_cohomology.hpp"

namespace phk {

GroupAction GroupAction::trivial(const FiniteGroup& g, const FinAb& m) {
  GroupAction a;
  a.g = g;
  a.m = m;
  a.mats.assign(g.n, IntMat::identity(m.ngens()));
  return a;
}

GroupAction GroupAction::cyclic_units(const FiniteGroup& g, i64 modulus, const std::vector<i64>& units) {
  GroupAction a;
  a.g = g;
  a.m = FinAb::cyclic(modulus);
  a.mats.reserve(g.n);
  for (int x = 0; x < g.n; ++x) {
    IntMat mt(a.m.ngens(), a.m.ngens());
    if (a.m.ngens() == 1) mt.at(0, 0) = units[x];
    a.mats.push_back(mt);
  }
  return a;
}

std::optional<std::string> GroupAction::validate() const {
  if (int(mats.size()) != g.n) return "one matrix per group element required";
  int t = m.ngens();
  IntMat rel = m.relations();
  auto congruent = [&](const IntMat& a, const IntMat& b) {
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        i64 diff = checked_sub(a.at(i, j), b.at(i, j));
        i64 order = i < int(m.factors.size()) ? m.factors[i] : 0;
        if (order == 0 ? diff != 0 : mod_floor(diff, order) != 0) return false;
      }
    return true;
  };
  for (const IntMat& a : mats) {
    if (a.rows() != t || a.cols() != t) return "matrix shape mismatch";
    // must preserve the relation lattice (well defined on M)
    for (int j = 0; j < int(m.factors.size()); ++j) {
      std::vector<i64> col(t, 0);
      for (int i = 0; i < t; ++i) col[i] = checked_mul(a.at(i, j), m.factors[j]);
      for (int i = 0; i < t; ++i) {
        i64 order = i < int(m.factors.size()) ? m.factors[i] : 0;
        if (order == 0 ? col[i] != 0 : mod_floor(col[i], order) != 0)
          return "matrix does not preserve coefficient relations";
      }
    }
  }
  if (!congruent(mats[0], IntMat::identity(t))) return "identity must act trivially";
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (!congruent(mats[x].mul(mats[y]), mats[g.mul(x, y)]))
        return "action is not a homomorphism at (" + std::to_string(x) + "," + std::to_string(y) + ")";
  // automorphism check: A_x A_{x^{-1}} = id already follows from the two above
  return std::nullopt;
}

i64 bar_tuple_count(const FiniteGroup& g, int p) {
  i64 c = 1;
  for (int i = 0; i < p; ++i) c = checked_mul(c, g.n - 1);
  return c;
}

namespace {

// tuples over non-identity elements, mixed-radix encoding; element k of G
// corresponds to digit k-1
i64 tuple_index(const FiniteGroup& g, const std::vector<int>& tuple) {
  i64 idx = 0;
  for (int x : tuple) idx = idx * (g.n - 1) + (x - 1);
  return idx;
}

std::vector<int> tuple_at(const FiniteGroup& g, int p, i64 index) {
  std::vector<int> t(p);
  for (int i = p - 1; i >= 0; --i) {
    t[i] = int(index % (g.n - 1)) + 1;
    index /= (g.n - 1);
  }
  return t;
}

}  // namespace

IntMat bar_cochain_differential(const GroupAction& action, int p) {
  const FiniteGroup& g = action.g;
  int t = action.m.ngens();
  i64 np = bar_tuple_count(g, p);
  i64 np1 = bar_tuple_count(g, p + 1);
  IntMat d(int(np1) * t, int(np) * t);
  auto add_block = [&](i64 row_tuple, i64 col_tuple, const IntMat& blk, i64 sign) {
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        d.at(int(row_tuple) * t + i, int(col_tuple) * t + j) =
            checked_add(d.at(int(row_tuple) * t + i, int(col_tuple) * t + j),
                        checked_mul(sign, blk.at(i, j)));
  };
  IntMat id = IntMat::identity(t);
  for (i64 r = 0; r < np1; ++r) {
    std::vector<int> tup = tuple_at(g, p + 1, r);
    // (df)(g1..g_{p+1}) = g1 . f(g2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{p+1} f(g1..gp)
    {
      std::vector<int> rest(tup.begin() + 1, tup.end());
      add_block(r, tuple_index(g, rest), action.mat(tup[0]), 1);
    }
    i64 sign = 1;
    for (int i = 1; i <= p; ++i) {
      sign = -sign;
      int merged = g.mul(tup[i - 1], tup[i]);
      if (merged == 0) continue;  // normalized cochains vanish on identity entries
      std::vector<int> mt;
      for (int k = 0; k < i - 1; ++k) mt.push_back(tup[k]);
      mt.push_back(merged);
      for (int k = i + 1; k <= p; ++k) mt.push_back(tup[k]);
      add_block(r, tuple_index(g, mt), id, sign);
    }
    {
      std::vector<int> front(tup.begin(), tup.end() - 1);
      add_block(r, tuple_index(g, front), id, (p + 1) % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

std::vector<FinAb> group_cohomology(const GroupAction& action, int n_max) {
  if (auto err = action.validate()) throw std::invalid_argument("group_cohomology: " + *err);
  if (!action.m.is_finite()) throw std::invalid_argument("group_cohomology: coefficients must be finite");
  int t = action.m.ngens();
  std::vector<FinAb> out;
  std::vector<IntMat> deltas;  // deltas[p]: C^p -> C^{p+1}
  for (int p = 0; p <= n_max; ++p) deltas.push_back(bar_cochain_differential(action, p));
  auto rel_lattice = [&](int p) {
    i64 np = bar_tuple_count(action.g, p);
    std::vector<i64> diag;
    for (i64 i = 0; i < np; ++i)
      for (i64 f : action.m.factors) diag.push_back(f);
    // free coefficient generators contribute no relations
    IntMat rel(int(np) * t, int(diag.size()));
    int col = 0;
    for (i64 i = 0; i < np; ++i)
      for (size_t j = 0; j < action.m.factors.size(); ++j) {
        rel.at(int(i) * t + int(j), col) = action.m.factors[j];
        ++col;
      }
    return rel;
  };
  for (int n = 0; n <= n_max; ++n) {
    IntMat prev = n == 0 ? IntMat(int(bar_tuple_count(action.g, 0)) * t, 0) : deltas[n - 1];
    Subquotient h = homology_at(prev, rel_lattice(n), deltas[n], rel_lattice(n + 1));
    out.push_back(h.group);
  }
  return out;
}

}  // namespace phk
