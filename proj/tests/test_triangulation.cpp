#include <doctest.h>

#include <algorithm>

#include "hypbounds/errors.hpp"
#include "hypbounds/triangulation.hpp"

using namespace hyp;

TEST_CASE("permutation helpers") {
  const Perm4 p{1, 2, 0, 3};
  CHECK(inverse(p) == Perm4{2, 0, 1, 3});
  CHECK(sign(p) == 1);
  CHECK(sign(Perm4{1, 0, 2, 3}) == -1);
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(Perm4{0, 0, 1, 2}));
}

TEST_CASE("Löbell triangulation sizes") {
  CHECK(triangulate_lobell(classical_lobell_coloring()).size() == 352);
  CHECK(triangulate_lobell(canonical_coloring(5)).size() == 288);
  for (int n = 5; n <= 20; ++n) REQUIRE(triangulate_lobell(canonical_coloring(n)).size() == 32 * (2 * n - 1));
}

TEST_CASE("each copy of R(6) contributes 44 boundary triangles") {
  const auto x = assemble_lobell(classical_lobell_coloring());
  int triangles = 0;
  for (const auto& f : x.polytope().faces()) triangles += static_cast<int>(f.size()) - 2;
  CHECK(triangles == 44);
  CHECK(cone_triangulation(x).size() == 8 * 44);
}

TEST_CASE("Löbell subdivision respects the face pairing") {
  // Tetrahedra are ordered copy by copy, so a base triangle must be glued
  // to the same fan triangle of the same face in the partner copy, with the
  // identity on vertex positions.
  for (int n : {5, 6, 9}) {
    const auto t = triangulate_lobell(canonical_coloring(n));
    const int per_copy = 4 * (2 * n - 1);
    for (int a = 0; a < t.size(); ++a) {
      const auto& g = t.gluing(a, 0);
      REQUIRE(g.face == 0);
      REQUIRE(g.tet / per_copy != a / per_copy);
      REQUIRE(g.tet % per_copy == a % per_copy);
      REQUIRE(g.perm == Perm4{0, 1, 2, 3});
    }
  }
}

TEST_CASE("Fibonacci triangulation sizes") {
  CHECK(triangulate_fibonacci(4).size() == 12);
  CHECK(triangulate_fibonacci(5).size() == 15);
  for (int n = 4; n <= 30; ++n) REQUIRE(triangulate_fibonacci(n).size() == 3 * n);
  CHECK_THROWS_AS(triangulate_fibonacci(3), DomainError);
}

TEST_CASE("Fibonacci cone face over F1 realizes s1") {
  // n = 4. Tetrahedra follow the face order of Y(4) skipping Q-faces:
  // F2, F4, F6, F8, then F1*..F8*. Vertex order is (Q, face from least).
  const auto y = build_fibonacci_polytope(4);
  const auto t = triangulate_fibonacci(4);
  std::vector<int> base_face;
  for (int f = 0; f < y.face_count(); ++f)
    if (std::find(y.face(f).begin(), y.face(f).end(), 0) == y.face(f).end()) base_face.push_back(f);
  auto tet_over = [&](const std::string& label) {
    return static_cast<int>(std::find(base_face.begin(), base_face.end(), *y.face_index(label)) - base_face.begin());
  };
  auto vertex_of = [&](int tet, int i) { return i == 0 ? 0 : y.face(base_face[tet])[i - 1]; };
  auto v = [&](const char* label) { return *y.vertex_index(label); };

  // F1 = (Q, P2, P4) is the cone over the edge P2P4 of F8* = (P2, P3, P4).
  const int over_f8s = tet_over("F8*");
  int lateral = -1;
  for (int i = 1; i < 4; ++i)
    if (vertex_of(over_f8s, i) == v("P3")) lateral = i;
  REQUIRE(lateral > 0);
  const auto& g = t.gluing(over_f8s, lateral);
  CHECK(g.tet == tet_over("F1*"));
  CHECK(g.face == 0);
  for (int i = 0; i < 4; ++i) {
    if (i == lateral) continue;
    const int from = vertex_of(over_f8s, i), to = vertex_of(g.tet, g.perm[i]);
    if (from == v("Q")) CHECK(to == v("P3"));
    if (from == v("P2")) CHECK(to == v("P4"));
    if (from == v("P4")) CHECK(to == v("P5"));
  }
}

TEST_CASE("constructed triangulations are closed orientable manifolds") {
  for (int n = 4; n <= 10; ++n) {
    const auto r = verify_triangulation(triangulate_fibonacci(n));
    REQUIRE(r.closed_orientable_manifold());
    CHECK(r.euler == 0);
    CHECK(r.cells == 3 * n);
  }
  for (int n = 5; n <= 8; ++n) {
    const auto r = verify_triangulation(triangulate_lobell(canonical_coloring(n)));
    REQUIRE(r.closed_orientable_manifold());
    // Polytope vertices stay distinct in the quotient; each copy adds its apex.
    CHECK(r.vertices == 4 * n + 8);
  }
  CHECK(verify_triangulation(triangulate_fibonacci(7)).closed_orientable_manifold());
}

TEST_CASE("broken involution is reported, not thrown") {
  auto t = triangulate_fibonacci(4);
  // Swap two images off the glued face so only involutivity breaks.
  Perm4 p = t.gluing(0, 1).perm;
  std::array<int, 3> others{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != 1) others[k++] = i;
  std::swap(p[others[0]], p[others[1]]);
  t.set_gluing(0, 1, {t.gluing(0, 1).tet, t.gluing(0, 1).face, p});
  CHECK_FALSE(t.structural_problems().empty());
  const auto r = verify_triangulation(t);
  CHECK_FALSE(r.gluing_consistent);
  CHECK(r.gluing_problem.find("involutive") != std::string::npos);
  CHECK_FALSE(r.closed_orientable_manifold());
}

TEST_CASE("export format") {
  const auto t = triangulate_fibonacci(4);
  const auto doc = export_triangulation(t);
  CHECK(doc.begin().key() == "tetCount");
  CHECK(doc["tetCount"] == 12);
  REQUIRE(doc["gluings"].size() == 12);
  const auto& entry = doc["gluings"][0][0];
  CHECK(entry.size() == 3);
  CHECK(entry[2].size() == 4);
  CHECK(export_triangulation(triangulate_lobell(classical_lobell_coloring()))["tetCount"] == 352);
}

TEST_CASE("export then import is the identity") {
  for (const auto& t : {triangulate_fibonacci(4), triangulate_fibonacci(9), triangulate_lobell(canonical_coloring(5))}) {
    const auto text = export_triangulation(t).dump();
    const auto back = import_triangulation(text);
    CHECK(back == t);
    CHECK(export_triangulation(back).dump() == text);
  }
}

TEST_CASE("import errors carry a location") {
  auto doc = nlohmann::json::parse(export_triangulation(triangulate_fibonacci(4)).dump());
  SUBCASE("dangling target") {
    doc["gluings"][3][2][0] = 12;
    CHECK_THROWS_WITH_AS(import_triangulation(doc), doctest::Contains("/gluings/3/2/0"), ParseError);
  }
  SUBCASE("wrong entry count") {
    doc["tetCount"] = 13;
    CHECK_THROWS_WITH_AS(import_triangulation(doc), doctest::Contains("/gluings"), ParseError);
  }
  SUBCASE("not a permutation") {
    doc["gluings"][0][0][2] = nlohmann::json::array({0, 0, 1, 2});
    CHECK_THROWS_WITH_AS(import_triangulation(doc), doctest::Contains("/gluings/0/0/2"), ParseError);
  }
  SUBCASE("syntax") { CHECK_THROWS_AS(import_triangulation(std::string("{\"tetCount\": ")), ParseError); }
}
