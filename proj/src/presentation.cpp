#include "hypbounds/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "hypbounds/errors.hpp"
#include "hypbounds/polytope.hpp"

namespace hyp {

namespace {

Word commutator(int a, int b) { return {{a, 1}, {b, 1}, {a, -1}, {b, -1}}; }

}  // namespace

GroupPresentation presentation_G(int n) {
  if (n < 5) throw DomainError("G(n) requires n >= 5 (got n=" + std::to_string(n) + ")");
  GroupPresentation p;
  const int gens = 2 * n + 2;
  for (int k = 1; k <= gens; ++k) p.generators.push_back("g" + std::to_string(k));
  // 1-based generator numbers as in the defining table.
  auto g = [](int k) { return k - 1; };
  auto add = [&p, &g](int a, int b) { p.relators.push_back(commutator(g(a), g(b))); };

  for (int i = 1; i <= gens; ++i) p.relators.push_back({{g(i), 1}, {g(i), 1}});
  for (int i = 1; i <= n; ++i) add(2 * n + 1, i);
  for (int i = 1; i <= n; ++i) add(2 * n + 2, n + i);
  for (int i = 1; i <= 2 * n - 1; ++i) add(i, i + 1);
  add(1, n);
  for (int i = 1; i <= n; ++i) add(i, n + i);
  add(n + 1, 2 * n);
  for (int i = 1; i <= n - 1; ++i) add(i, n + 1 + i);
  return p;
}

int commutator_count(const GroupPresentation& p) {
  return static_cast<int>(std::count_if(p.relators.begin(), p.relators.end(),
                                        [](const Word& w) { return w.size() == 4; }));
}

GroupPresentation presentation_F2(int n) {
  if (n < 3) throw DomainError("F(2,n) requires n >= 3 (got n=" + std::to_string(n) + ")");
  GroupPresentation p;
  for (int k = 1; k <= n; ++k) p.generators.push_back("x" + std::to_string(k));
  for (int i = 1; i <= n; ++i)
    p.relators.push_back({{wrap_index(i, n) - 1, 1}, {wrap_index(i + 1, n) - 1, 1}, {wrap_index(i + 2, n) - 1, -1}});
  return p;
}

std::string word_to_text(const GroupPresentation& p, const Word& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << p.generators.at(w[i].generator);
    if (w[i].exponent != 1) out << '^' << w[i].exponent;
  }
  return out.str();
}

std::string relator_to_bracket_text(const GroupPresentation& p, const Word& w) {
  if (w.size() == 2 && w[0] == w[1] && w[0].exponent == 1) return p.generators.at(w[0].generator) + "^2";
  if (w.size() == 4 && w[0].generator == w[2].generator && w[1].generator == w[3].generator &&
      w[0].exponent == 1 && w[1].exponent == 1 && w[2].exponent == -1 && w[3].exponent == -1)
    return "[" + p.generators.at(w[0].generator) + "," + p.generators.at(w[1].generator) + "]";
  return word_to_text(p, w);
}

std::string to_text(const GroupPresentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << "\nrelators (" << p.relators.size() << "):\n";
  for (const auto& w : p.relators) out << "  " << relator_to_bracket_text(p, w) << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const GroupPresentation& p) {
  nlohmann::ordered_json doc;
  doc["generators"] = p.generators;
  auto relators = nlohmann::ordered_json::array();
  for (const auto& w : p.relators) {
    auto word = nlohmann::ordered_json::array();
    for (const auto& l : w) word.push_back(nlohmann::ordered_json::array({p.generators.at(l.generator), l.exponent}));
    relators.push_back(std::move(word));
  }
  doc["relators"] = std::move(relators);
  return doc;
}

}  // namespace hyp
