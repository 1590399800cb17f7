#pragma once

// Finite quotients of a finitely presented group, one representative per
// kernel.  Kernels are fingerprinted by the breadth-first canonical form of
// the coset table of the quotient map, so two epimorphisms compare equal
// exactly when their kernels coincide.

#include <string>
#include <vector>

#include "phk/fin_group.hpp"
#include "phk/presentation.hpp"

namespace phk {

struct EpiClass {
  FiniteGroup target;
  std::vector<int> gen_images;     // image of each presentation generator
  std::string kernel_fingerprint;  // canonical coset-table encoding

  int index() const { return target.n; }
};

// Canonical coset-table fingerprint of the map sending generator i to
// gen_images[i] in `g` (right multiplication action on g, BFS relabeled
// from the identity).
std::string kernel_fingerprint(const FiniteGroup& g, const std::vector<int>& gen_images);

// All epimorphism kernels of index <= bound, one EpiClass per kernel,
// sorted by (index, fingerprint).  Targets are catalogue groups.
std::vector<EpiClass> enumerate_finite_quotients(const Presentation& p, int bound);

// Same, but with an explicit catalogue (e.g. extended from files).
std::vector<EpiClass> enumerate_finite_quotients(const Presentation& p, int bound,
                                                 const std::vector<FiniteGroup>& catalogue);

// Does ker(a) contain ker(b)?  Equivalently, a factors through b via a
// (then unique) homomorphism phi with phi . b = a; returns phi as an
// element map b.target -> a.target if it exists.
std::optional<std::vector<int>> factor_through(const EpiClass& a, const EpiClass& b,
                                               const Presentation& p);

// Evaluate a word at given generator images.
int evaluate_word(const FiniteGroup& g, const std::vector<int>& images, const Word& w);

}  // namespace phk
