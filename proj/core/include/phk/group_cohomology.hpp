#pragma once

// Continuous cohomology of a finite group with coefficients in a finite
// abelian module, computed from the normalized bar resolution.

#include <vector>

#include "phk/abelian.hpp"
#include "phk/fin_group.hpp"

namespace phk {

// Action of G on a finite abelian group M by automorphisms, one integer
// matrix per group element in M's generator coordinates.
struct GroupAction {
  FiniteGroup g;
  FinAb m;
  std::vector<IntMat> mats;

  static GroupAction trivial(const FiniteGroup& g, const FinAb& m);

  // Z/m with G acting through a homomorphism G -> (Z/m)^* given by units.
  static GroupAction cyclic_units(const FiniteGroup& g, i64 modulus, const std::vector<i64>& units);

  const IntMat& mat(int elem) const { return mats[elem]; }

  // Is this a genuine action by automorphisms?  Returns error text if not.
  std::optional<std::string> validate() const;
};

// H^n(G; M) for 0 <= n <= n_max via the normalized bar resolution.
std::vector<FinAb> group_cohomology(const GroupAction& action, int n_max);

// The normalized bar cochain differential C^p -> C^{p+1}, exposed both for
// the Cartan-Leray double complex and for tests.  C^p has one block of
// m-coordinates per p-tuple of non-identity elements of G.
IntMat bar_cochain_differential(const GroupAction& action, int p);

// Number of p-tuples indexing C^p, i.e. (|G|-1)^p.
i64 bar_tuple_count(const FiniteGroup& g, int p);

}  // namespace phk
