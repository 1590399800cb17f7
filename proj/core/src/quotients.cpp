#include "phk/quotients.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace phk {

int evaluate_word(const FiniteGroup& g, const std::vector<int>& images, const Word& w) {
  int x = 0;
  for (int letter : w) {
    int img = images[std::abs(letter) - 1];
    x = g.mul(x, letter > 0 ? img : g.inv(img));
  }
  return x;
}

std::string kernel_fingerprint(const FiniteGroup& g, const std::vector<int>& gen_images) {
  // BFS from the identity over right multiplication by generator images
  // and their inverses; relabel states in visit order.  The resulting
  // transition table depends only on the kernel of the induced map.
  int k = int(gen_images.size());
  std::vector<int> label(g.n, -1);
  std::vector<int> order;
  label[0] = 0;
  order.push_back(0);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int x = order[qi];
    for (int i = 0; i < 2 * k; ++i) {
      int im = i < k ? gen_images[i] : g.inv(gen_images[i - k]);
      int y = g.mul(x, im);
      if (label[y] < 0) {
        label[y] = int(order.size());
        order.push_back(y);
      }
    }
  }
  std::ostringstream os;
  os << order.size() << ":";
  for (int x : order) {
    for (int i = 0; i < 2 * k; ++i) {
      int im = i < k ? gen_images[i] : g.inv(gen_images[i - k]);
      os << label[g.mul(x, im)] << ",";
    }
    os << ";";
  }
  return os.str();
}

std::vector<EpiClass> enumerate_finite_quotients(const Presentation& p, int bound) {
  return enumerate_finite_quotients(p, bound, group_catalogue(bound));
}

std::vector<EpiClass> enumerate_finite_quotients(const Presentation& p, int bound,
                                                 const std::vector<FiniteGroup>& catalogue) {
  p.check_valid();
  if (bound < 1) throw std::invalid_argument("quotient order bound must be >= 1");
  std::vector<EpiClass> out;
  std::set<std::string> seen;
  for (const FiniteGroup& q : catalogue) {
    if (q.n > bound) continue;
    // backtracking over generator images with incremental relator pruning
    std::vector<int> images(p.ngens, 0);
    auto relators_ok = [&]() {
      for (const Word& w : p.relators)
        if (evaluate_word(q, images, w) != 0) return false;
      return true;
    };
    auto surjective = [&]() { return int(q.generated_subgroup(images).size()) == q.n; };
    auto rec = [&](auto&& self, int i) -> void {
      if (i == p.ngens) {
        if (relators_ok() && surjective()) {
          std::string fp = kernel_fingerprint(q, images);
          if (seen.insert(fp).second) out.push_back({q, images, fp});
        }
        return;
      }
      for (int img = 0; img < q.n; ++img) {
        images[i] = img;
        self(self, i + 1);
      }
      images[i] = 0;
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(), [](const EpiClass& a, const EpiClass& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a.kernel_fingerprint < b.kernel_fingerprint;
  });
  return out;
}

std::optional<std::vector<int>> factor_through(const EpiClass& a, const EpiClass& b,
                                               const Presentation& p) {
  // want phi : b.target -> a.target with phi(b(g_i)) = a(g_i)
  const FiniteGroup& gb = b.target;
  const FiniteGroup& ga = a.target;
  std::vector<int> phi(gb.n, -1);
  phi[0] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int i = 0; i < int(b.gen_images.size()); ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          int step_b = dir == 0 ? b.gen_images[i] : gb.inv(b.gen_images[i]);
          int step_a = dir == 0 ? a.gen_images[i] : ga.inv(a.gen_images[i]);
          int y = gb.mul(x, step_b);
          int img = ga.mul(phi[x], step_a);
          if (phi[y] < 0) {
            phi[y] = img;
            next.push_back(y);
          } else if (phi[y] != img) {
            return std::nullopt;
          }
        }
      }
    frontier = std::move(next);
  }
  for (int x = 0; x < gb.n; ++x)
    if (phi[x] < 0) return std::nullopt;  // b not surjective onto its target
  for (int x = 0; x < gb.n; ++x)
    for (int y = 0; y < gb.n; ++y)
      if (phi[gb.mul(x, y)] != ga.mul(phi[x], phi[y])) return std::nullopt;
  return phi;
}

}  // namespace phk
