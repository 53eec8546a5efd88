#include "hypbounds/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "hypbounds/errors.hpp"
#include "union_find.hpp"

namespace hyp {

Perm4 inverse(const Perm4& p) {
  Perm4 q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}

int sign(const Perm4& p) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0 ? 1 : -1;
}

bool is_permutation(const Perm4& p) {
  std::array<bool, 4> hit{};
  for (int x : p) {
    if (x < 0 || x > 3 || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

std::vector<std::string> Triangulation::structural_problems() const {
  std::vector<std::string> problems;
  const int n = size();
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = gluings_[t][f];
      const std::string where = "tet " + std::to_string(t) + " face " + std::to_string(f);
      if (g.tet < 0 || g.tet >= n || g.face < 0 || g.face > 3) {
        problems.push_back(where + ": target out of range");
        continue;
      }
      if (!is_permutation(g.perm) || g.perm[f] != g.face) {
        problems.push_back(where + ": permutation does not carry face " + std::to_string(f) + " to face " +
                           std::to_string(g.face));
        continue;
      }
      const auto& back = gluings_[g.tet][g.face];
      if (back.tet != t || back.face != f || back.perm != inverse(g.perm))
        problems.push_back(where + ": gluing is not involutive");
    }
  }
  return problems;
}

namespace {

using Label = long;

// Collects tetrahedra with abstract vertex labels and glues faces by
// matching labels.
class Builder {
 public:
  int add(std::array<Label, 4> labels) {
    labels_.push_back(labels);
    gluings_.emplace_back();
    done_.push_back({false, false, false, false});
    return static_cast<int>(labels_.size()) - 1;
  }

  const std::array<Label, 4>& labels(int t) const { return labels_[t]; }
  int size() const { return static_cast<int>(labels_.size()); }

  template <class Map>
  void glue(int t, int f, int t2, int f2, Map&& map) {
    if (done_[t][f] || done_[t2][f2]) throw StructuralError("face glued twice while building triangulation");
    Perm4 p{};
    p[f] = f2;
    for (int i = 0; i < 4; ++i) {
      if (i == f) continue;
      const Label target = map(labels_[t][i]);
      int j = 0;
      while (j < 4 && (j == f2 || labels_[t2][j] != target)) ++j;
      if (j == 4) throw StructuralError("glued faces do not share vertex labels");
      p[i] = j;
    }
    if (!is_permutation(p)) throw StructuralError("face gluing is not a bijection");
    gluings_[t][f] = {t2, f2, p};
    gluings_[t2][f2] = {t, f, inverse(p)};
    done_[t][f] = done_[t2][f2] = true;
  }

  // Glues the remaining faces pairwise by shared label sets.
  void glue_interior() {
    std::map<std::array<Label, 3>, std::vector<std::pair<int, int>>> by_face;
    for (int t = 0; t < size(); ++t)
      for (int f = 0; f < 4; ++f)
        if (!done_[t][f]) by_face[face_key(t, f)].emplace_back(t, f);
    for (const auto& [key, slots] : by_face) {
      if (slots.size() != 2) throw StructuralError("interior triangle shared by " + std::to_string(slots.size()) +
                                                   " tetrahedra");
      glue(slots[0].first, slots[0].second, slots[1].first, slots[1].second, [](Label l) { return l; });
    }
  }

  std::array<Label, 3> face_key(int t, int f) const {
    std::array<Label, 3> k{};
    int j = 0;
    for (int i = 0; i < 4; ++i)
      if (i != f) k[j++] = labels_[t][i];
    std::sort(k.begin(), k.end());
    return k;
  }

  Triangulation finish() const {
    for (const auto& d : done_)
      if (std::find(d.begin(), d.end(), false) != d.end()) throw StructuralError("triangulation has a free face");
    return Triangulation(gluings_);
  }

 private:
  std::vector<std::array<Label, 4>> labels_;
  std::vector<std::array<FaceGluing, 4>> gluings_;
  std::vector<std::array<bool, 4>> done_;
};

}  // namespace

Triangulation cone_triangulation(const GluedComplex& x) {
  const auto& p = x.polytope();
  const Label stride = p.vertex_count() + 1;
  auto label = [stride](int copy, int v) { return copy * stride + v; };

  // fan[f] maps the sorted vertex triple of each fan triangle to its position.
  std::vector<std::map<std::array<int, 3>, int>> fan(p.face_count());
  for (int f = 0; f < p.face_count(); ++f) {
    const auto& c = p.face(f);
    for (int k = 1; k + 1 < static_cast<int>(c.size()); ++k) {
      std::array<int, 3> tri{c[0], c[k], c[k + 1]};
      std::sort(tri.begin(), tri.end());
      fan[f][tri] = k - 1;
    }
  }

  Builder b;
  std::vector<std::vector<int>> first_tet(x.copies(), std::vector<int>(p.face_count()));
  for (int copy = 0; copy < x.copies(); ++copy) {
    const Label apex = label(copy, p.vertex_count());
    for (int f = 0; f < p.face_count(); ++f) {
      const auto& c = p.face(f);
      first_tet[copy][f] = b.size();
      for (int k = 1; k + 1 < static_cast<int>(c.size()); ++k)
        b.add({apex, label(copy, c[0]), label(copy, c[k]), label(copy, c[k + 1])});
    }
  }

  for (const auto& m : x.pairing().matches()) {
    const auto& c = p.face(m.from.face);
    for (int k = 1; k + 1 < static_cast<int>(c.size()); ++k) {
      std::array<int, 3> image{m.image(c[0]), m.image(c[k]), m.image(c[k + 1])};
      std::sort(image.begin(), image.end());
      const auto it = fan[m.to.face].find(image);
      if (it == fan[m.to.face].end())
        throw StructuralError("pairing of face " + p.face_label(m.from.face) + " does not respect the fan subdivision");
      const int t = first_tet[m.from.copy][m.from.face] + k - 1;
      const int t2 = first_tet[m.to.copy][m.to.face] + it->second;
      const Label to_stride = m.to.copy * stride;
      b.glue(t, 0, t2, 0, [&](Label l) { return to_stride + m.image(static_cast<int>(l % stride)); });
    }
  }
  b.glue_interior();
  return b.finish();
}

Triangulation triangulate_lobell(const FaceColoring& c) { return cone_triangulation(assemble_lobell(c)); }

Triangulation triangulate_fibonacci(int n) {
  const auto y = build_fibonacci_polytope(n);
  const auto pairing = fibonacci_pairing(n);
  constexpr int Q = 0;

  std::map<std::array<Label, 3>, int> face_of;
  for (int f = 0; f < y.face_count(); ++f) {
    std::array<Label, 3> k{y.face(f)[0], y.face(f)[1], y.face(f)[2]};
    std::sort(k.begin(), k.end());
    face_of[k] = f;
  }

  Builder b;
  for (int f = 0; f < y.face_count(); ++f) {
    const auto& c = y.face(f);
    if (std::find(c.begin(), c.end(), Q) != c.end()) continue;
    b.add({Q, c[0], c[1], c[2]});
  }

  // Tetrahedron faces lying on the boundary of Y(n): the bases, and cone
  // faces that coincide with a Q-face.
  std::vector<std::pair<int, int>> on_face(y.face_count(), {-1, -1});
  for (int t = 0; t < b.size(); ++t)
    for (int f = 0; f < 4; ++f)
      if (auto it = face_of.find(b.face_key(t, f)); it != face_of.end()) on_face[it->second] = {t, f};

  for (const auto& m : pairing.matches()) {
    const auto [t, f] = on_face[m.from.face];
    const auto [t2, f2] = on_face[m.to.face];
    if (t < 0 || t2 < 0) throw StructuralError("face " + y.face_label(m.from.face) + " is not realized by a tetrahedron");
    b.glue(t, f, t2, f2, [&](Label l) { return static_cast<Label>(m.image(static_cast<int>(l))); });
  }
  b.glue_interior();
  return b.finish();
}

ManifoldReport verify_triangulation(const Triangulation& t) {
  ManifoldReport r;
  const auto problems = t.structural_problems();
  if (!problems.empty()) {
    r.gluing_problem = problems.front();
    return r;
  }
  r.gluing_consistent = true;
  const int n = t.size();

  constexpr int kEdge[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  detail::UnionFind verts(4 * n), edges(6 * n), ends(16 * n);
  int self_faces = 0;
  r.edges_valid = true;
  for (int a = 0; a < n; ++a) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(a, f);
      if (g.tet == a && g.face == f) ++self_faces;
      const auto& p = g.perm;
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        verts.unite(4 * a + v, 4 * g.tet + p[v]);
        for (int w = 0; w < 4; ++w) {
          if (w == f || w == v) continue;
          ends.unite(16 * a + 4 * v + w, 16 * g.tet + 4 * p[v] + p[w]);
          if (v < w && !edges.unite(6 * a + kEdge[v][w], 6 * g.tet + kEdge[p[v]][p[w]], p[v] > p[w] ? 1 : 0))
            r.edges_valid = false;
        }
      }
    }
  }
  std::vector<int> vclass = verts.classes(r.vertices);
  edges.classes(r.edges);
  r.faces = (4 * n - self_faces) / 2 + self_faces;
  r.cells = n;
  r.euler = static_cast<long>(r.vertices) - r.edges + r.faces - r.cells;

  // Link of a vertex class: a triangle per corner, three sides each glued
  // once, link vertices are edge ends.
  std::vector<int> corner_count(r.vertices, 0);
  std::vector<std::set<int>> end_roots(r.vertices);
  detail::UnionFind corners(4 * n);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f)
      for (int v = 0; v < 4; ++v)
        if (v != f) corners.unite(4 * a + v, 4 * t.gluing(a, f).tet + t.gluing(a, f).perm[v]);
  std::vector<std::set<int>> corner_roots(r.vertices);
  for (int a = 0; a < n; ++a) {
    for (int v = 0; v < 4; ++v) {
      const int q = vclass[4 * a + v];
      ++corner_count[q];
      corner_roots[q].insert(corners.find(4 * a + v));
      for (int w = 0; w < 4; ++w)
        if (w != v) end_roots[q].insert(ends.find(16 * a + 4 * v + w));
    }
  }
  r.links_are_spheres = true;
  for (int q = 0; q < r.vertices; ++q) {
    VertexLink link;
    link.vertex = q;
    link.corners = corner_count[q];
    link.euler = static_cast<int>(end_roots[q].size()) - 3 * corner_count[q] / 2 + corner_count[q];
    link.connected = corner_roots[q].size() == 1;
    r.links_are_spheres &= link.is_sphere();
    r.links.push_back(link);
  }

  // o(t') = -o(t) * sign(perm) for every gluing.
  std::vector<int> orient(n, 0);
  r.orientable = true;
  for (int root = 0; root < n && r.orientable; ++root) {
    if (orient[root]) continue;
    orient[root] = 1;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty() && r.orientable) {
      const int a = todo.front();
      todo.pop();
      for (int f = 0; f < 4; ++f) {
        const auto& g = t.gluing(a, f);
        const int want = -orient[a] * sign(g.perm);
        if (!orient[g.tet]) {
          orient[g.tet] = want;
          todo.push(g.tet);
        } else if (orient[g.tet] != want) {
          r.orientable = false;
          break;
        }
      }
    }
  }
  return r;
}

nlohmann::ordered_json export_triangulation(const Triangulation& t) {
  nlohmann::ordered_json doc;
  doc["tetCount"] = t.size();
  auto gluings = nlohmann::ordered_json::array();
  for (const auto& tet : t.gluings()) {
    auto faces = nlohmann::ordered_json::array();
    for (const auto& g : tet) faces.push_back({g.tet, g.face, g.perm});
    gluings.push_back(std::move(faces));
  }
  doc["gluings"] = std::move(gluings);
  return doc;
}

namespace {

int int_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

Triangulation import_triangulation(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("/", "expected an object");
  if (!doc.contains("tetCount")) throw ParseError("/tetCount", "missing");
  const int n = int_at(doc["tetCount"], "/tetCount");
  if (n < 0) throw ParseError("/tetCount", "negative");
  if (!doc.contains("gluings") || !doc["gluings"].is_array()) throw ParseError("/gluings", "expected an array");
  const auto& gl = doc["gluings"];
  if (static_cast<int>(gl.size()) != n)
    throw ParseError("/gluings", "has " + std::to_string(gl.size()) + " entries, tetCount is " + std::to_string(n));

  std::vector<std::array<FaceGluing, 4>> gluings(n);
  for (int t = 0; t < n; ++t) {
    const std::string tw = "/gluings/" + std::to_string(t);
    if (!gl[t].is_array() || gl[t].size() != 4) throw ParseError(tw, "expected 4 face gluings");
    for (int f = 0; f < 4; ++f) {
      const std::string fw = tw + "/" + std::to_string(f);
      const auto& e = gl[t][f];
      if (!e.is_array() || e.size() != 3) throw ParseError(fw, "expected [tet, face, perm]");
      FaceGluing g;
      g.tet = int_at(e[0], fw + "/0");
      if (g.tet < 0 || g.tet >= n) throw ParseError(fw + "/0", "target tetrahedron " + std::to_string(g.tet) +
                                                                   " out of range");
      g.face = int_at(e[1], fw + "/1");
      if (g.face < 0 || g.face > 3) throw ParseError(fw + "/1", "face must be 0..3");
      if (!e[2].is_array() || e[2].size() != 4) throw ParseError(fw + "/2", "expected 4 images");
      for (int i = 0; i < 4; ++i) g.perm[i] = int_at(e[2][i], fw + "/2/" + std::to_string(i));
      if (!is_permutation(g.perm)) throw ParseError(fw + "/2", "not a permutation of 0..3");
      if (g.perm[f] != g.face) throw ParseError(fw + "/2", "permutation must carry face to target face");
      gluings[t][f] = g;
    }
  }
  return Triangulation(std::move(gluings));
}

Triangulation import_triangulation(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("/ (byte " + std::to_string(e.byte) + ")", "invalid JSON");
  }
  return import_triangulation(doc);
}

}  // namespace hyp
