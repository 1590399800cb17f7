#include "phk/fin_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace phk {

namespace {

// Build a table from an element list with a multiplication rule, relabeling
// so the identity is 0 and the element order is the construction order.
template <typename T, typename Mul>
FiniteGroup table_from_elements(const std::vector<T>& elems, const T& id, Mul mul) {
  int n = int(elems.size());
  std::map<T, int> index;
  std::vector<T> relabeled;
  relabeled.push_back(id);
  index[id] = 0;
  for (const T& e : elems)
    if (!index.count(e)) {
      index[e] = int(relabeled.size());
      relabeled.push_back(e);
    }
  FiniteGroup g;
  g.n = n;
  g.table.assign(size_t(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[size_t(a) * n + b] = index.at(mul(relabeled[a], relabeled[b]));
  return g;
}

}  // namespace

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.n = 1;
  g.table = {0};
  g.name = "C1";
  return g;
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
  FiniteGroup g;
  g.n = m;
  g.table.resize(size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.table[size_t(a) * m + b] = (a + b) % m;
  g.name = "C" + std::to_string(m);
  return g;
}

FiniteGroup FiniteGroup::from_fin_ab(const FinAb& m) {
  if (!m.is_finite()) throw std::invalid_argument("from_fin_ab: group must be finite");
  FiniteGroup g = trivial();
  for (i64 d : m.factors) g = direct_product(g, cyclic(int(d)));
  std::string nm;
  for (i64 d : m.factors) nm += (nm.empty() ? "C" : "xC") + std::to_string(d);
  g.name = nm.empty() ? "C1" : nm;
  return g;
}

FiniteGroup FiniteGroup::dihedral(int k) {
  // elements (r, f) with r mod k, f in {0,1}; (r1,f1)(r2,f2) = (r1 + s*r2, f1^f2), s = f1 ? -1 : 1
  std::vector<std::pair<int, int>> elems;
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < k; ++r) elems.push_back({r, f});
  auto mul = [k](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    int r = a.second ? (a.first - b.first % k + k) % k : (a.first + b.first) % k;
    return std::pair<int, int>{r, a.second ^ b.second};
  };
  FiniteGroup g = table_from_elements(elems, {0, 0}, mul);
  g.name = k == 3 ? "S3" : "D" + std::to_string(k);
  return g;
}

FiniteGroup FiniteGroup::dicyclic(int k) {
  // <a, b | a^{2k} = 1, b^2 = a^k, b a b^{-1} = a^{-1}>, elements a^r b^f
  std::vector<std::pair<int, int>> elems;
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < 2 * k; ++r) elems.push_back({r, f});
  int m = 2 * k;
  auto mul = [m, k](const std::pair<int, int>& x, const std::pair<int, int>& y) {
    // (a^r b^f)(a^s b^g):  b a^s = a^{-s} b
    int r = x.first, f = x.second, s = y.first, g = y.second;
    int rr = f ? (r - s % m + m) % m : (r + s) % m;
    if (f && g) return std::pair<int, int>{(rr + k) % m, 0};  // b^2 = a^k
    return std::pair<int, int>{rr, f ^ g};
  };
  FiniteGroup g = table_from_elements(elems, {0, 0}, mul);
  g.name = k == 2 ? "Q8" : "Dic" + std::to_string(k);
  return g;
}

FiniteGroup FiniteGroup::alternating4() {
  // even permutations of {0,1,2,3}
  std::vector<std::array<int, 4>> elems;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto mul = [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
    std::array<int, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
    return c;
  };
  FiniteGroup g = table_from_elements(elems, {0, 1, 2, 3}, mul);
  g.name = "A4";
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.n = a.n * b.n;
  g.table.resize(size_t(g.n) * g.n);
  auto enc = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          g.table[size_t(enc(x1, y1)) * g.n + enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  g.name = a.name + "x" + b.name;
  return g;
}

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < n; ++b)
    if (mul(a, b) == 0) return b;
  throw std::logic_error("element has no inverse");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::string> FiniteGroup::validate() const {
  if (int(table.size()) != n * n) return "table size mismatch";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) < 0 || mul(a, b) >= n) return "table entry out of range";
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) return "0 is not an identity";
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) has_inv = true;
    if (!has_inv) return "element " + std::to_string(a) + " has no inverse";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
  return std::nullopt;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> h{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens) {
        int y = mul(x, g);
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {h.begin(), h.end()};
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  std::set<std::vector<int>> found;
  found.insert({0});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(found.begin(), found.end());
    for (const auto& h : current)
      for (int g = 1; g < n; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<int> gens = h;
        gens.push_back(g);
        auto bigger = generated_subgroup(gens);
        if (found.insert(bigger).second) grew = true;
      }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> FiniteGroup::subgroup_classes() const {
  auto subs = subgroups();
  std::vector<std::vector<int>> reps;
  std::set<std::vector<int>> seen;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    reps.push_back(h);
    for (int g = 0; g < n; ++g) {
      std::vector<int> conj;
      int gi = inv(g);
      for (int x : h) conj.push_back(mul(g, mul(x, gi)));
      std::sort(conj.begin(), conj.end());
      seen.insert(conj);
    }
  }
  return reps;
}

std::vector<int> FiniteGroup::conjugacy_class_of(int a) const {
  std::set<int> cls;
  for (int g = 0; g < n; ++g) cls.insert(mul(g, mul(a, inv(g))));
  return {cls.begin(), cls.end()};
}

int FiniteGroup::num_conjugacy_classes() const {
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++count;
    for (int x : conjugacy_class_of(a)) seen[x] = true;
  }
  return count;
}

std::string FiniteGroup::to_table_text() const {
  std::ostringstream os;
  os << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) os << mul(a, b) << (b + 1 < n ? " " : "");
    os << "\n";
  }
  return os.str();
}

FiniteGroup FiniteGroup::parse_table_text(const std::string& text) {
  std::istringstream is(text);
  FiniteGroup g;
  if (!(is >> g.n) || g.n < 1) throw std::invalid_argument("group table: bad order");
  g.table.resize(size_t(g.n) * g.n);
  for (size_t i = 0; i < g.table.size(); ++i)
    if (!(is >> g.table[i])) throw std::invalid_argument("group table: truncated");
  if (auto err = g.validate()) throw std::invalid_argument("group table: " + *err);
  return g;
}

namespace {

bool iso_backtrack(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& phi,
                   std::vector<bool>& used, int next) {
  // extend phi (partial on 0..next-1, closed under products within domain)
  if (next == a.n) return true;
  if (phi[next] >= 0) return iso_backtrack(a, b, phi, used, next + 1);
  for (int img = 0; img < b.n; ++img) {
    if (used[img]) continue;
    if (b.element_order(img) != a.element_order(next)) continue;
    // tentatively assign and close under multiplication with known values
    std::vector<std::pair<int, int>> assigned;
    auto assign = [&](int x, int y) -> bool {
      if (phi[x] >= 0) return phi[x] == y;
      if (used[y]) return false;
      phi[x] = y;
      used[y] = true;
      assigned.push_back({x, y});
      return true;
    };
    bool ok = assign(next, img);
    for (size_t i = 0; ok && i < assigned.size(); ++i) {
      int x = assigned[i].first;
      for (int z = 0; ok && z < a.n; ++z) {
        if (phi[z] < 0) continue;
        ok = assign(a.mul(x, z), b.mul(phi[x], phi[z])) && assign(a.mul(z, x), b.mul(phi[z], phi[x]));
      }
    }
    if (ok && iso_backtrack(a, b, phi, used, next + 1)) return true;
    for (auto [x, y] : assigned) {
      phi[x] = -1;
      used[y] = false;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.n != b.n) return std::nullopt;
  std::vector<int> phi(a.n, -1);
  std::vector<bool> used(b.n, false);
  phi[0] = 0;
  used[0] = true;
  if (iso_backtrack(a, b, phi, used, 1)) return phi;
  return std::nullopt;
}

std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& a,
                                                    const std::vector<int>& gens,
                                                    const FiniteGroup& b,
                                                    const std::vector<int>& images) {
  std::vector<int> phi(a.n, -1);
  phi[0] = 0;
  std::vector<int> frontier{0};
  // close the domain under right multiplication by generators
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = a.mul(x, gens[i]);
        int img = b.mul(phi[x], images[i]);
        if (phi[y] < 0) {
          phi[y] = img;
          next.push_back(y);
        } else if (phi[y] != img) {
          return std::nullopt;
        }
      }
    frontier = std::move(next);
  }
  for (int x = 0; x < a.n; ++x)
    if (phi[x] < 0) return std::nullopt;  // gens do not generate a
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return std::nullopt;
  return phi;
}

std::vector<FiniteGroup> group_catalogue(int bound) {
  std::vector<FiniteGroup> out;
  if (bound > kCatalogueMaxOrder)
    throw std::invalid_argument("group catalogue is built in only up to order " +
                                std::to_string(kCatalogueMaxOrder));
  for (int m = 1; m <= bound; ++m) {
    // abelian groups: one per multiset of invariant factors with product m
    std::vector<std::vector<i64>> chains;
    std::vector<i64> acc;
    // enumerate ascending divisor chains d1 | d2 | ... with product m
    auto rec = [&](auto&& self, i64 rem, i64 min_d) -> void {
      if (rem == 1) {
        chains.push_back(acc);
        return;
      }
      for (i64 d = min_d; d <= rem; ++d)
        if (rem % d == 0) {
          // remaining factors must all be multiples of d
          acc.push_back(d);
          self(self, rem / d, d);
          acc.pop_back();
        }
    };
    rec(rec, m, 2);
    for (auto& chain : chains) {
      // keep only genuine invariant-factor chains d1 | d2 | ...
      bool ok = true;
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i + 1] % chain[i] != 0) ok = false;
      if (!ok) continue;
      out.push_back(FiniteGroup::from_fin_ab({chain, 0}));
    }
    // nonabelian groups of order <= 15
    if (m >= 6 && m % 2 == 0) out.push_back(FiniteGroup::dihedral(m / 2));
    if (m % 4 == 0 && m >= 8) out.push_back(FiniteGroup::dicyclic(m / 4));
    if (m == 12) out.push_back(FiniteGroup::alternating4());
  }
  // drop duplicates (e.g. D2 would coincide with C2xC2 if it ever appeared)
  std::vector<FiniteGroup> dedup;
  for (auto& g : out) {
    bool dup = false;
    for (auto& h : dedup)
      if (h.n == g.n && find_isomorphism(g, h)) dup = true;
    if (!dup) dedup.push_back(std::move(g));
  }
  std::stable_sort(dedup.begin(), dedup.end(),
                   [](const FiniteGroup& a, const FiniteGroup& b) { return a.n < b.n; });
  return dedup;
}

}  // namespace phk
