#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hyp {

struct Letter {
  int generator;  // 0-based
  int exponent;   // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Group generated by reflections in the faces of R(n): g_k^2 for every face
// and [g_a, g_b] for every pair of faces sharing an edge, listed in the
// order of the defining table. n >= 5.
GroupPresentation presentation_G(int n);

// Number of commutator relators of presentation_G(n), i.e. relators of
// length 4.
int commutator_count(const GroupPresentation& p);

// F(2,n) = <x_1..x_n | x_i x_{i+1} x_{i+2}^{-1}>, indices mod n. n >= 3.
GroupPresentation presentation_F2(int n);

// "g1 g2 g1^-1 g2^-1"
std::string word_to_text(const GroupPresentation& p, const Word& w);
// "[g1,g2]" for a commutator, "g1^2" for a square, otherwise word_to_text.
std::string relator_to_bracket_text(const GroupPresentation& p, const Word& w);
std::string to_text(const GroupPresentation& p);

nlohmann::ordered_json to_json(const GroupPresentation& p);

}  // namespace hyp
