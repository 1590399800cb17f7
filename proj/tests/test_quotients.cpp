#include <doctest.h>

#include "phk/quotients.hpp"

using namespace phk;

namespace {

Presentation free_group(int n) { return {n, {}}; }

}  // namespace

TEST_CASE("quotients of the infinite cyclic group") {
  Presentation z = free_group(1);
  auto classes = enumerate_finite_quotients(z, 4);
  REQUIRE(classes.size() == 4);  // one kernel per index 1..4
  for (int i = 0; i < 4; ++i) {
    CHECK(classes[i].index() == i + 1);
    CHECK(classes[i].target.is_abelian());
    CHECK(classes[i].target.element_order(classes[i].gen_images[0] == 0 ? 0 : classes[i].gen_images[0]) ==
          classes[i].index());
  }
}

TEST_CASE("trivial group has only the trivial quotient") {
  Presentation p{1, {{1}}};  // <a | a>
  auto classes = enumerate_finite_quotients(p, 6);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].index() == 1);
}

TEST_CASE("rank-2 free abelian group at order 2") {
  Presentation z2{2, {Presentation::parse_word("aba^-1b^-1", 2)}};
  auto classes = enumerate_finite_quotients(z2, 2);
  // trivial + three index-2 kernels
  REQUIRE(classes.size() == 4);
  int index2 = 0;
  for (const auto& c : classes)
    if (c.index() == 2) ++index2;
  CHECK(index2 == 3);
}

TEST_CASE("abelian-target cross check against abelianization") {
  // quotients of the Klein-bottle group <a,b | abab^-1> restricted to
  // abelian targets match quotients of its abelianization Z + Z/2
  Presentation kb{2, {Presentation::parse_word("abab^-1", 2)}};
  CHECK(abelianization(kb) == FinAb{{2}, 1});
  auto classes = enumerate_finite_quotients(kb, 4);
  int abelian_targets = 0;
  for (const auto& c : classes)
    if (c.target.is_abelian()) ++abelian_targets;
  // quotients of Z + Z/2 of order <= 4, one per kernel:
  //   index 1: 1
  //   index 2: maps onto C2: 3 kernels (kill a, kill b, kill ab)
  //   index 3: onto C3: 1 kernel (b must die)
  //   index 4: onto C4: a -> generator, b -> 0 or 2: 2 kernels; onto C2xC2: 1 kernel
  // total abelian: 1 + 3 + 1 + 2 + 1 = 8
  CHECK(abelian_targets == 8);
}

TEST_CASE("factor_through detects kernel inclusion") {
  Presentation z = free_group(1);
  auto classes = enumerate_finite_quotients(z, 6);
  auto find_index = [&](int k) {
    for (const auto& c : classes)
      if (c.index() == k) return c;
    throw std::logic_error("missing class");
  };
  EpiClass c2 = find_index(2), c4 = find_index(4), c3 = find_index(3);
  CHECK(factor_through(c2, c4, z).has_value());   // ker(->C4) inside ker(->C2)
  CHECK(!factor_through(c4, c2, z).has_value());
  CHECK(!factor_through(c3, c4, z).has_value());
}

TEST_CASE("fingerprints identify equal kernels") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  CHECK(kernel_fingerprint(c3, {1}) == kernel_fingerprint(c3, {2}));
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(kernel_fingerprint(c4, {1}) == kernel_fingerprint(c4, {3}));
  CHECK(kernel_fingerprint(c4, {1}) != kernel_fingerprint(c4, {2}));
}

TEST_CASE("word parsing") {
  Word w = Presentation::parse_word("a^2b^-3", 2);
  CHECK(w == Word{1, 1, -2, -2, -2});
  CHECK(Presentation::format_word(w) == "a^2b^-3");
  CHECK_THROWS(Presentation::parse_word("c", 2));
  Presentation p = Presentation::parse_text("gens: 2\nabab^-1\n");
  CHECK(p.ngens == 2);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == Word{1, 2, 1, -2});
}
