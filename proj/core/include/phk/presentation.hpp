#pragma once

// Finitely presented groups: generator count plus relator words as signed
// generator indices (+k means generator k, -(k+1) encodes its inverse via
// the sign).  Words use 1-based signed letters internally: +1 = a, -1 = a^-1.

#include <string>
#include <vector>

#include "phk/abelian.hpp"

namespace phk {

using Word = std::vector<int>;  // nonzero entries, |x|-1 is the generator index

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;

  void check_valid() const;  // indices in range, no zero letters

  // Text form: "gens: 2" then one relator per line in letters a..z with ^-1,
  // e.g. "abab^-1".  See parse/format below.
  static Presentation parse_text(const std::string& text);
  std::string to_text() const;

  static Word parse_word(const std::string& s, int ngens);
  static std::string format_word(const Word& w);

  // Exponent-sum matrix (ngens x nrelators).
  IntMat relator_matrix() const;
};

// Abelianization via Smith normal form of the relator matrix.
FinAb abelianization(const Presentation& p);

}  // namespace phk
