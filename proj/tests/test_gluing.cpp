#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypbounds/errors.hpp"
#include "hypbounds/gluing.hpp"

using namespace hyp;

namespace {

std::string edge_name(const CombinatorialPolytope& p, int e) {
  auto a = p.vertex_label(p.edge(e).vertices[0]), b = p.vertex_label(p.edge(e).vertices[1]);
  if (b < a) std::swap(a, b);
  return a + b;
}

std::string edge_name(const CombinatorialPolytope& p, const std::string& u, const std::string& v) {
  return edge_name(p, *p.edge_index(*p.vertex_index(u), *p.vertex_index(v)));
}

// Generator sequence of a Fibonacci cycle as signed indices: +i for s_i,
// -i for s_i^{-1}.
std::vector<int> generator_word(int n, const EdgeCycle& c) {
  std::vector<int> word;
  for (const auto& s : c.steps) {
    const bool forward = s.from.face < 2 * n;
    const int i = (forward ? s.from.face : s.to.face) + 1;
    word.push_back(forward ? i : -i);
  }
  return word;
}

bool same_cyclic_word_up_to_inversion(std::vector<int> a, const std::vector<int>& b) {
  auto rotations_match = [](const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) return false;
    for (size_t r = 0; r < x.size(); ++r) {
      bool ok = true;
      for (size_t i = 0; i < x.size() && ok; ++i) ok = x[(i + r) % x.size()] == y[i];
      if (ok) return true;
    }
    return false;
  };
  if (rotations_match(a, b)) return true;
  std::reverse(a.begin(), a.end());
  for (auto& x : a) x = -x;
  return rotations_match(a, b);
}

}  // namespace

TEST_CASE("assemble_lobell on the classical coloring") {
  const auto x = assemble_lobell(classical_lobell_coloring());
  CHECK(x.copies() == 8);
  CHECK(x.quotient_faces() == 56);
  CHECK(x.all_faces_matched());
  for (int g = 0; g < 8; ++g) CHECK(x.orientation(g) == (__builtin_popcount(g) % 2 ? -1 : 1));

  const auto& p = x.polytope();
  for (int f = 0; f < p.face_count(); ++f) {
    const Match* m = x.pairing().match({0, f});
    REQUIRE(m != nullptr);
    CHECK(x.orientation(m->to.copy) == -1);
  }
  // Faces 3, 6, 8, 11 are δ in the classical coloring.
  const Match* across_delta = x.pairing().match({0, *p.face_index("3")});
  CHECK(across_delta->to == Cell{7, *p.face_index("3")});
}

TEST_CASE("assemble_lobell rejects invalid colorings") {
  auto c = classical_lobell_coloring();
  c.colors[0] = c.colors[1];
  CHECK_THROWS_AS(assemble_lobell(c), DomainError);
}

TEST_CASE("pairing is an involution") {
  for (const auto& x : {assemble_lobell(canonical_coloring(6)), assemble_fibonacci(6)}) {
    for (int c = 0; c < x.copies(); ++c)
      for (int f = 0; f < x.polytope().face_count(); ++f) {
        const Match* m = x.pairing().match({c, f});
        REQUIRE(m != nullptr);
        const Match* back = x.pairing().match(m->to);
        REQUIRE(back != nullptr);
        CHECK(back->to == Cell{c, f});
        for (const auto& [v, w] : m->vertex_map) CHECK(back->image(w) == v);
      }
  }
}

TEST_CASE("Löbell edge cycles have length 4") {
  for (int n = 5; n <= 10; ++n) {
    const auto x = assemble_lobell(canonical_coloring(n));
    const auto cycles = edge_cycles(x);
    REQUIRE(static_cast<int>(cycles.size()) == 12 * n);
    REQUIRE(x.quotient_edges() == 12 * n);
    for (const auto& c : cycles) REQUIRE(c.edges.size() == 4);
  }
  const auto fig = edge_cycles(assemble_lobell(classical_lobell_coloring()));
  CHECK(fig.size() == 72);
}

TEST_CASE("fibonacci_pairing vertex maps") {
  const auto y = build_fibonacci_polytope(4);
  const auto pairing = fibonacci_pairing(4);
  auto v = [&](const char* label) { return *y.vertex_index(label); };
  const Match* s1 = pairing.match({0, *y.face_index("F1")});
  REQUIRE(s1 != nullptr);
  CHECK(s1->to.face == *y.face_index("F1*"));
  CHECK(s1->image(v("Q")) == v("P3"));
  CHECK(s1->image(v("P2")) == v("P4"));
  CHECK(s1->image(v("P4")) == v("P5"));
  const Match* s2 = pairing.match({0, *y.face_index("F2")});
  CHECK(s2->image(v("R")) == v("P4"));
  CHECK(s2->image(v("P3")) == v("P5"));
  CHECK(s2->image(v("P5")) == v("P6"));
  CHECK_THROWS_AS(fibonacci_pairing(3), DomainError);
}

TEST_CASE("Fibonacci edge cycles follow the s_i, s_{i-1}^-1, s_{i-2}^-1 pattern") {
  for (int n = 4; n <= 10; ++n) {
    const auto x = assemble_fibonacci(n);
    const auto& y = x.polytope();
    const int m = 2 * n;
    const auto cycles = edge_cycles(x);
    REQUIRE(static_cast<int>(cycles.size()) == 2 * n);
    REQUIRE(x.quotient_edges() == 2 * n);
    CHECK(x.quotient_faces() == 2 * n);

    auto P = [m](int i) { return "P" + std::to_string(wrap_index(i, m)); };
    for (int i = 1; i <= m; ++i) {
      const std::string apex = i % 2 == 1 ? "Q" : "R";
      const std::set<std::string> expected = {edge_name(y, apex, P(i + 1)), edge_name(y, P(i + 2), P(i + 3)),
                                              edge_name(y, P(i), P(i + 2))};
      const auto it = std::find_if(cycles.begin(), cycles.end(), [&](const EdgeCycle& c) {
        return std::any_of(c.edges.begin(), c.edges.end(),
                           [&](const CopyEdge& e) { return edge_name(y, e.edge) == edge_name(y, apex, P(i + 1)); });
      });
      REQUIRE(it != cycles.end());
      REQUIRE(it->edges.size() == 3);
      std::set<std::string> got;
      for (const auto& e : it->edges) got.insert(edge_name(y, e.edge));
      CHECK(got == expected);
      const std::vector<int> expected_word = {i, -wrap_index(i - 1, m), -wrap_index(i - 2, m)};
      CHECK(same_cyclic_word_up_to_inversion(generator_word(n, *it), expected_word));
    }
  }
}

TEST_CASE("closed orientable manifold checks") {
  for (int n = 4; n <= 10; ++n) {
    const auto r = verify_closed_manifold(assemble_fibonacci(n));
    CHECK(r.gluing_consistent);
    CHECK(r.euler == 0);
    CHECK(r.vertices == 1);
    CHECK(r.edges_valid);
    CHECK(r.links_are_spheres);
    CHECK(r.orientable);
    CHECK(r.closed_orientable_manifold());
  }
  const auto r = verify_closed_manifold(assemble_lobell(classical_lobell_coloring()));
  CHECK(r.closed_orientable_manifold());
  CHECK(r.vertices == 24);
  CHECK(r.edges == 72);
  CHECK(r.faces == 56);
  CHECK(r.cells == 8);
  CHECK(r.euler == 0);
  for (const auto& l : r.links) {
    CHECK(l.corners == 8);
    CHECK(l.is_sphere());
  }
}

TEST_CASE("single copy of Y(4) without pairing is rejected") {
  const GluedComplex x(build_fibonacci_polytope(4), {1}, FacePairing(1, 16));
  CHECK_FALSE(x.all_faces_matched());
  const auto r = verify_closed_manifold(x);
  CHECK_FALSE(r.gluing_consistent);
  CHECK(r.gluing_problem.find("unmatched") != std::string::npos);
  CHECK_FALSE(r.closed_orientable_manifold());
  CHECK_THROWS_AS(edge_cycles(x), StructuralError);
}

TEST_CASE("corrupted pairing is caught") {
  const auto y = build_fibonacci_polytope(4);
  auto v = [&](const char* label) { return *y.vertex_index(label); };
  auto pairing = fibonacci_pairing(4);
  // s_1 with the images of Q and P2 swapped.
  pairing.replace({0, *y.face_index("F1")}, {0, *y.face_index("F1*")},
                  {{v("Q"), v("P4")}, {v("P2"), v("P3")}, {v("P4"), v("P5")}});
  const GluedComplex x(y, {1}, pairing);
  CHECK_THROWS_AS(edge_cycles(x), StructuralError);
  CHECK_FALSE(verify_closed_manifold(x).closed_orientable_manifold());
}

TEST_CASE("vertex map that is not a polygon symmetry is rejected on assembly") {
  const auto p = build_lobell_polytope(5);
  FacePairing pairing(2, p.face_count());
  for (int f = 0; f < p.face_count(); ++f) {
    std::vector<std::pair<int, int>> map;
    const auto& c = p.face(f);
    for (size_t i = 0; i < c.size(); ++i) map.emplace_back(c[i], c[i]);
    if (f == 0) std::swap(map[0].second, map[2].second);
    pairing.add({0, f}, {1, f}, map);
  }
  CHECK_THROWS_AS(GluedComplex(p, {1, -1}, pairing), StructuralError);
}

TEST_CASE("same-sign copies glued by the identity are not orientable") {
  const auto p = build_lobell_polytope(5);
  FacePairing pairing(2, p.face_count());
  for (int f = 0; f < p.face_count(); ++f) {
    std::vector<std::pair<int, int>> id;
    for (int v : p.face(f)) id.emplace_back(v, v);
    pairing.add({0, f}, {1, f}, id);
  }
  CHECK_FALSE(verify_closed_manifold(GluedComplex(p, {1, 1}, pairing)).orientable);
  // The double of a ball is S^3: all checks pass with opposite signs.
  CHECK(verify_closed_manifold(GluedComplex(p, {1, -1}, pairing)).closed_orientable_manifold());
}

TEST_CASE("glued complex JSON document") {
  const auto doc = to_json(assemble_fibonacci(4));
  CHECK(doc["copies"] == 1);
  REQUIRE(doc["pairing"].size() == 8);
  CHECK(doc["pairing"][0]["from"] == nlohmann::json::array({0, 0}));
  CHECK(doc["pairing"][0]["to"] == nlohmann::json::array({0, 8}));
  CHECK(doc["pairing"][0]["vertexMap"].size() == 3);
}
