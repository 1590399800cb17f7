#pragma once

// Finite groups as multiplication tables over {0..n-1} with identity 0,
// and the catalogue of isomorphism-class representatives used when
// enumerating finite quotients and weak-equivalence probes.

#include <optional>
#include <string>
#include <vector>

#include "phk/abelian.hpp"
#include "phk/intmat.hpp"

namespace phk {

struct FiniteGroup {
  int n = 1;
  std::vector<int> table;  // table[a*n+b] = a*b
  std::string name;        // catalogue name, empty for ad hoc groups

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int m);
  static FiniteGroup from_fin_ab(const FinAb& m);   // must be finite
  static FiniteGroup dihedral(int k);               // order 2k, k >= 2
  static FiniteGroup dicyclic(int k);               // order 4k, k >= 2 (k=2: Q8)
  static FiniteGroup alternating4();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int mul(int a, int b) const { return table[size_t(a) * n + b]; }
  int inv(int a) const;
  int order() const { return n; }
  int element_order(int a) const;
  bool is_abelian() const;

  // Group-axiom validation: identity, inverses, associativity (exhaustive).
  // Returns an error description or nullopt.
  std::optional<std::string> validate() const;

  // Subgroup generated by a set of elements, as a sorted element list.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  // All subgroups, each a sorted element list, deterministically ordered.
  std::vector<std::vector<int>> subgroups() const;

  // Representatives of conjugacy classes of subgroups.
  std::vector<std::vector<int>> subgroup_classes() const;

  std::vector<int> conjugacy_class_of(int a) const;
  int num_conjugacy_classes() const;

  // Multiplication-table text format: first line n, then n rows of n entries.
  std::string to_table_text() const;
  static FiniteGroup parse_table_text(const std::string& text);
};

// Isomorphism search by generator-image backtracking; returns an element
// bijection phi with phi[a*b] = phi[a]*phi[b], or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

// Homomorphisms determined by images of `gens` (all extensions to the
// subgroup generated by gens must be consistent); helper for hom search.
// Returns the full element map if gens generate a, else nullopt.
std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& a,
                                                    const std::vector<int>& gens,
                                                    const FiniteGroup& b,
                                                    const std::vector<int>& images);

// Isomorphism-class representatives of all groups of order <= bound.
// Complete for bound <= 15 (verified against the known counts); larger
// orders can be supplied externally via the CLI catalogue directory.
std::vector<FiniteGroup> group_catalogue(int bound);

constexpr int kCatalogueMaxOrder = 15;

}  // namespace phk
