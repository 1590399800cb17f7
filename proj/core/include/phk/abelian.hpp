#pragma once

// Finitely generated abelian groups in invariant-factor form, plus the
// lattice calculus used to compute kernels, images and subquotients of
// maps between presented groups.  A presented group is Z^n modulo the
// column span of a relation lattice; every (co)homology group in this
// library is produced here as a subquotient K/I of such a presentation.

#include <optional>
#include <string>
#include <vector>

#include "phk/intmat.hpp"

namespace phk {

// Invariant factors d1 | d2 | ... | dk (each >= 2) plus free rank.
struct FinAb {
  std::vector<i64> factors;
  int rank = 0;

  bool operator==(const FinAb& o) const = default;
  bool is_trivial() const { return factors.empty() && rank == 0; }
  bool is_finite() const { return rank == 0; }
  i64 order() const;  // throws if infinite
  std::string to_string() const;  // e.g. "0", "Z/2 + Z/4", "Z + Z/2"

  static FinAb trivial() { return {}; }
  static FinAb cyclic(i64 n);  // n >= 1, n == 1 gives trivial
  static FinAb free(int rank) { return {{}, rank}; }

  // Direct sum, renormalized to invariant-factor form.
  FinAb direct_sum(const FinAb& o) const;

  // Tensor with Z/m: each Z/d becomes Z/gcd(d,m), each Z becomes Z/m.
  FinAb tensor_zm(i64 m) const;

  // Total generator count (torsion + free).
  int ngens() const { return int(factors.size()) + rank; }

  // Relation lattice diag(d1..dk) padded with zero columns for free gens,
  // i.e. the presentation Z^ngens / span(relations()).
  IntMat relations() const;
};

// Normalize an arbitrary diagonal multiset of orders into invariant factors.
FinAb fin_ab_from_orders(const std::vector<i64>& orders, int rank = 0);

// --- Subquotients of Z^n --------------------------------------------------

// K/I for lattices I  (subgroup generated by I-columns) inside K (basis
// columns, full column rank).  Requires span(I) contained in span(K).
struct Subquotient {
  IntMat ambient_k;  // basis of K, n x k
  IntMat ambient_i;  // generators of I, n x m
  FinAb group;       // K/I in invariant-factor form

  // Express an ambient vector (must lie in K) in the subquotient's
  // normal-form coordinates; used to build induced maps.
  // coords are with respect to the K-basis.
  std::vector<i64> k_coords(const std::vector<i64>& x) const;
};

Subquotient subquotient(const IntMat& k_basis, const IntMat& i_gens);

// Homology at B of the two-step complex  A --f--> B --g--> C  where each
// term is Z^* modulo a relation lattice:  (g^{-1}(rel_c)) / (f Z + rel_b).
Subquotient homology_at(const IntMat& f, const IntMat& rel_b,
                        const IntMat& g, const IntMat& rel_c);

// Induced map on subquotients: F maps the ambient space of `a` to the
// ambient space of `b`, carrying K_a into K_b and I_a into I_b (validated).
// Returned matrix is k_b-coordinates x k_a-coordinates.
IntMat induced_map(const Subquotient& a, const Subquotient& b, const IntMat& f);

// Does the induced map define an isomorphism a.group -> b.group?
// (Both must be finite.)
bool induced_iso(const Subquotient& a, const Subquotient& b, const IntMat& f);

// Image of the induced map as a subquotient of b's ambient space:
// (F K_a + I_b) / I_b.
Subquotient induced_image(const Subquotient& a, const Subquotient& b, const IntMat& f);

// Explicit coordinates on a subquotient: proj sends K-basis coordinates to
// generator coordinates of `group` (torsion generators in invariant-factor
// order, then free generators); section is a right inverse modulo I.
struct NormalForm {
  FinAb group;
  IntMat proj;     // group gens x K-coords
  IntMat section;  // K-coords x group gens
};

NormalForm normal_form(const Subquotient& s);

// Matrix of the induced map in generator coordinates of the normal forms.
IntMat induced_map_normal(const Subquotient& a, const NormalForm& na,
                          const Subquotient& b, const NormalForm& nb, const IntMat& f);

// Reduce generator coordinates modulo the invariant factors (free part untouched).
std::vector<i64> reduce_coords(const FinAb& g, const std::vector<i64>& x);

}  // namespace phk
