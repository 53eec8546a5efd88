#include <doctest.h>

#include <set>

#include "hypbounds/errors.hpp"
#include "hypbounds/polytope.hpp"
#include "hypbounds/presentation.hpp"

using namespace hyp;

TEST_CASE("G(5) and G(6) relator counts") {
  const auto g5 = presentation_G(5);
  CHECK(g5.generators.size() == 12);
  CHECK(g5.relators.size() == 12 + 30);
  CHECK(commutator_count(g5) == 30);
  const auto g6 = presentation_G(6);
  CHECK(g6.generators.size() == 14);
  CHECK(g6.relators.size() == 14 + 36);
  CHECK_THROWS_AS(presentation_G(4), DomainError);
}

TEST_CASE("G(n) commutators are exactly the edges of R(n)") {
  for (int n = 5; n <= 30; ++n) {
    const auto g = presentation_G(n);
    const auto p = build_lobell_polytope(n);
    REQUIRE(commutator_count(g) == p.edge_count());
    std::set<std::pair<int, int>> from_table, from_edges;
    for (const auto& w : g.relators) {
      if (w.size() != 4) continue;
      REQUIRE(from_table.insert(std::minmax(w[0].generator, w[1].generator)).second);
    }
    for (const auto& e : p.edges()) from_edges.insert({e.faces[0], e.faces[1]});
    REQUIRE(from_table == from_edges);
  }
}

TEST_CASE("relators reference declared generators only") {
  for (const auto& pr : {presentation_G(7), presentation_F2(9)})
    for (const auto& w : pr.relators)
      for (const auto& l : w) {
        CHECK(l.generator >= 0);
        CHECK(l.generator < static_cast<int>(pr.generators.size()));
        CHECK((l.exponent == 1 || l.exponent == -1));
      }
}

TEST_CASE("F(2,3) relators") {
  const auto f = presentation_F2(3);
  REQUIRE(f.relators.size() == 3);
  CHECK(word_to_text(f, f.relators[0]) == "x1 x2 x3^-1");
  CHECK(word_to_text(f, f.relators[1]) == "x2 x3 x1^-1");
  CHECK(word_to_text(f, f.relators[2]) == "x3 x1 x2^-1");
  CHECK_THROWS_AS(presentation_F2(2), DomainError);
}

TEST_CASE("F(2,8) for M(4)") {
  const auto f = presentation_F2(8);
  CHECK(f.generators.size() == 8);
  CHECK(f.relators.size() == 8);
  for (const auto& w : f.relators) CHECK(w.size() == 3);
  CHECK(word_to_text(f, f.relators[7]) == "x8 x1 x2^-1");
}

TEST_CASE("presentation text and JSON forms") {
  const auto g = presentation_G(5);
  CHECK(relator_to_bracket_text(g, g.relators[0]) == "g1^2");
  CHECK(relator_to_bracket_text(g, g.relators[12]) == "[g11,g1]");
  CHECK(word_to_text(g, g.relators[12]) == "g11 g1 g11^-1 g1^-1");
  const auto doc = to_json(g);
  CHECK(doc["generators"].size() == 12);
  CHECK(doc["relators"][12] == nlohmann::json::parse(R"([["g11",1],["g1",1],["g11",-1],["g1",-1]])"));
  CHECK(to_text(g).find("[g6,g10]") != std::string::npos);
}
