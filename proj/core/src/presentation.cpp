#include "phk/presentation.hpp"

#include <cctype>
#include <sstream>

namespace phk {

void Presentation::check_valid() const {
  for (const Word& w : relators)
    for (int x : w)
      if (x == 0 || std::abs(x) > ngens)
        throw std::invalid_argument("relator letter out of range");
}

Word Presentation::parse_word(const std::string& s, int ngens) {
  Word w;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c < 'a' || c > 'z') throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word");
    int gen = c - 'a' + 1;
    if (gen > ngens) throw std::invalid_argument("letter '" + std::string(1, c) + "' exceeds generator count");
    ++i;
    int exponent = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      int sign = 1;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        if (s[i] == '-') sign = -1;
        ++i;
      }
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) throw std::invalid_argument("missing exponent after '^'");
      exponent = sign * std::stoi(s.substr(start, i - start));
    }
    int letter = exponent < 0 ? -gen : gen;
    for (int k = 0; k < std::abs(exponent); ++k) w.push_back(letter);
  }
  return w;
}

std::string Presentation::format_word(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size();) {
    int letter = w[i];
    size_t j = i;
    while (j < w.size() && w[j] == letter) ++j;
    int run = int(j - i);
    s += char('a' + std::abs(letter) - 1);
    if (letter < 0)
      s += run == 1 ? "^-1" : "^-" + std::to_string(run);
    else if (run > 1)
      s += "^" + std::to_string(run);
    i = j;
  }
  return s;
}

Presentation Presentation::parse_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Presentation p;
  bool have_gens = false;
  while (std::getline(is, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    if (!have_gens) {
      std::string prefix = "gens:";
      if (trimmed.rfind(prefix, 0) != 0) throw std::invalid_argument("presentation: expected 'gens: <n>' first");
      p.ngens = std::stoi(trimmed.substr(prefix.size()));
      if (p.ngens < 0) throw std::invalid_argument("presentation: negative generator count");
      have_gens = true;
      continue;
    }
    p.relators.push_back(parse_word(trimmed, p.ngens));
  }
  if (!have_gens) throw std::invalid_argument("presentation: missing 'gens:' line");
  return p;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "gens: " << ngens << "\n";
  for (const Word& w : relators) os << format_word(w) << "\n";
  return os.str();
}

IntMat Presentation::relator_matrix() const {
  IntMat m(ngens, int(relators.size()));
  for (int j = 0; j < int(relators.size()); ++j)
    for (int x : relators[j]) {
      int g = std::abs(x) - 1;
      m.at(g, j) = checked_add(m.at(g, j), x > 0 ? 1 : -1);
    }
  return m;
}

FinAb abelianization(const Presentation& p) {
  p.check_valid();
  std::vector<i64> d = snf_diagonal(p.relator_matrix());
  std::vector<i64> torsion;
  for (i64 x : d)
    if (x != 1) torsion.push_back(x);
  return fin_ab_from_orders(torsion, p.ngens - int(d.size()));
}

}  // namespace phk
