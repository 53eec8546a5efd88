#include "hypbounds/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "hypbounds/errors.hpp"

namespace hyp {

std::string_view family_name(Family f) {
  return f == Family::Lobell ? "lobell" : "fibonacci";
}

Family parse_family(std::string_view name) {
  if (name == "lobell") return Family::Lobell;
  if (name == "fibonacci") return Family::Fibonacci;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

int wrap_index(int i, int period) {
  return ((i - 1) % period + period) % period + 1;
}

CombinatorialPolytope::CombinatorialPolytope(Family family, int n,
                                             std::vector<std::string> vertex_labels,
                                             std::vector<std::vector<int>> faces,
                                             std::vector<std::string> face_labels)
    : family_(family),
      n_(n),
      vertex_labels_(std::move(vertex_labels)),
      faces_(std::move(faces)),
      face_labels_(std::move(face_labels)) {
  if (face_labels_.size() != faces_.size())
    throw DomainError("face label count does not match face count");
  const int nv = vertex_count();
  vertex_faces_.assign(nv, {});
  vertex_edges_.assign(nv, {});

  std::map<std::pair<int, int>, int> by_pair;
  for (int f = 0; f < face_count(); ++f) {
    const auto& cyc = faces_[f];
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      const int u = cyc[i];
      if (u < 0 || u >= nv) throw DomainError("face " + std::to_string(f) + " references unknown vertex");
      auto& vf = vertex_faces_[u];
      if (std::find(vf.begin(), vf.end(), f) == vf.end()) vf.push_back(f);
      const int w = cyc[(i + 1) % k];
      if (u == w) continue;
      const auto key = std::minmax(u, w);
      auto [it, fresh] = by_pair.try_emplace({key.first, key.second}, edge_count());
      if (fresh) edges_.push_back({{key.first, key.second}, {}});
      edges_[it->second].faces.push_back(f);
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    auto& ed = edges_[e];
    std::sort(ed.faces.begin(), ed.faces.end());
    vertex_edges_[ed.vertices[0]].push_back(e);
    vertex_edges_[ed.vertices[1]].push_back(e);
  }
}

std::optional<int> CombinatorialPolytope::vertex_index(std::string_view label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_labels_[v] == label) return v;
  return std::nullopt;
}

std::optional<int> CombinatorialPolytope::face_index(std::string_view label) const {
  for (int f = 0; f < face_count(); ++f)
    if (face_labels_[f] == label) return f;
  return std::nullopt;
}

std::optional<int> CombinatorialPolytope::edge_index(int u, int v) const {
  if (u < 0 || u >= vertex_count()) return std::nullopt;
  for (int e : vertex_edges_[u]) {
    const auto& ev = edges_[e].vertices;
    if ((ev[0] == u && ev[1] == v) || (ev[0] == v && ev[1] == u)) return e;
  }
  return std::nullopt;
}

int CombinatorialPolytope::position_in_face(int f, int v) const {
  const auto& cyc = faces_.at(f);
  auto it = std::find(cyc.begin(), cyc.end(), v);
  return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
}

namespace {

// Flip faces so every edge is traversed in opposite directions by its two
// faces (face 0 keeps its given direction), then rotate each cycle to start
// at its least vertex.
void normalize_faces(std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, std::vector<int>> faces_on_edge;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& c = faces[f];
    for (size_t i = 0; i < c.size(); ++i) {
      auto key = std::minmax(c[i], c[(i + 1) % c.size()]);
      faces_on_edge[{key.first, key.second}].push_back(f);
    }
  }
  auto has_directed = [&](int f, int u, int w) {
    const auto& c = faces[f];
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] == u && c[(i + 1) % c.size()] == w) return true;
    return false;
  };
  std::vector<bool> done(faces.size(), false);
  std::queue<int> todo;
  for (size_t root = 0; root < faces.size(); ++root) {
    if (done[root]) continue;
    done[root] = true;
    todo.push(static_cast<int>(root));
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      const auto cyc = faces[f];
      for (size_t i = 0; i < cyc.size(); ++i) {
        const int u = cyc[i], w = cyc[(i + 1) % cyc.size()];
        auto key = std::minmax(u, w);
        for (int g : faces_on_edge[{key.first, key.second}]) {
          if (g == f || done[g]) continue;
          if (has_directed(g, u, w)) std::reverse(faces[g].begin(), faces[g].end());
          done[g] = true;
          todo.push(g);
        }
      }
    }
  }
  for (auto& c : faces) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
}

}  // namespace

CombinatorialPolytope build_lobell_polytope(int n) {
  if (n < 5) throw DomainError("Andreev condition fails below n=5 (got n=" + std::to_string(n) + ")");
  auto U = [n](int i) { return 0 * n + wrap_index(i, n) - 1; };
  auto A = [n](int i) { return 1 * n + wrap_index(i, n) - 1; };
  auto B = [n](int i) { return 2 * n + wrap_index(i, n) - 1; };
  auto D = [n](int i) { return 3 * n + wrap_index(i, n) - 1; };

  std::vector<std::string> vlabels;
  for (char ring : {'U', 'A', 'B', 'D'})
    for (int i = 1; i <= n; ++i) vlabels.push_back(ring + std::to_string(i));

  // U_i = top ∩ P_i ∩ P_{i+1}, A_i = P_i ∩ P_{i+1} ∩ L_{i+1},
  // B_j = L_j ∩ L_{j+1} ∩ P_j, D_j = bottom ∩ L_j ∩ L_{j+1}.
  std::vector<std::vector<int>> faces(2 * n + 2);
  for (int i = 1; i <= n; ++i) faces[i - 1] = {U(i), U(i - 1), A(i - 1), B(i), A(i)};
  for (int j = 1; j <= n; ++j) faces[n + j - 1] = {B(j), A(j - 1), B(j - 1), D(j - 1), D(j)};
  for (int i = 1; i <= n; ++i) faces[2 * n].push_back(U(i));
  for (int j = n; j >= 1; --j) faces[2 * n + 1].push_back(D(j));
  normalize_faces(faces);

  std::vector<std::string> flabels;
  for (int k = 1; k <= 2 * n + 2; ++k) flabels.push_back(std::to_string(k));
  return CombinatorialPolytope(Family::Lobell, n, std::move(vlabels), std::move(faces), std::move(flabels));
}

CombinatorialPolytope build_fibonacci_polytope(int n) {
  if (n < 4) throw DomainError("Y(n) requires n >= 4 (got n=" + std::to_string(n) + ")");
  const int m = 2 * n;
  auto P = [m](int i) { return wrap_index(i, m) + 1; };
  constexpr int Q = 0, R = 1;

  std::vector<std::string> vlabels = {"Q", "R"};
  for (int i = 1; i <= m; ++i) vlabels.push_back("P" + std::to_string(i));

  std::vector<std::vector<int>> faces(2 * m);
  std::vector<std::string> flabels(2 * m);
  for (int i = 1; i <= m; ++i) {
    faces[i - 1] = {i % 2 == 1 ? Q : R, P(i + 1), P(i + 3)};
    faces[m + i - 1] = {P(i + 2), P(i + 3), P(i + 4)};
    flabels[i - 1] = "F" + std::to_string(i);
    flabels[m + i - 1] = "F" + std::to_string(i) + "*";
  }
  normalize_faces(faces);
  return CombinatorialPolytope(Family::Fibonacci, n, std::move(vlabels), std::move(faces), std::move(flabels));
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate_polytope(const CombinatorialPolytope& p) {
  ValidationReport r;
  auto add = [&r](std::string_view name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::string(name), ok, std::move(detail)});
  };

  {
    std::string bad;
    for (int f = 0; f < p.face_count(); ++f) {
      std::set<int> seen(p.face(f).begin(), p.face(f).end());
      if (seen.size() != p.face(f).size()) bad = "face " + p.face_label(f);
    }
    add(check::kNoRepeatedVertex, bad.empty(), bad);
  }
  {
    std::string bad;
    for (const auto& e : p.edges())
      if (e.faces.size() != 2 || e.faces[0] == e.faces[1])
        bad = p.vertex_label(e.vertices[0]) + "-" + p.vertex_label(e.vertices[1]) + " lies in " +
              std::to_string(e.faces.size()) + " face(s)";
    add(check::kEdgeInTwoFaces, bad.empty(), bad);
  }
  {
    const int chi = p.vertex_count() - p.edge_count() + p.face_count();
    add(check::kEuler, chi == 2, "V-E+F = " + std::to_string(chi));
  }
  {
    std::vector<int> comp(p.face_count());
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&comp](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const auto& e : p.edges())
      for (size_t i = 1; i < e.faces.size(); ++i) comp[root(e.faces[i])] = root(e.faces[0]);
    int components = 0;
    for (int f = 0; f < p.face_count(); ++f) components += root(f) == f;
    add(check::kConnected, components == 1, std::to_string(components) + " component(s)");
  }
  {
    std::set<std::pair<int, int>> directed;
    bool ok = true;
    for (const auto& c : p.faces())
      for (size_t i = 0; i < c.size(); ++i) ok &= directed.insert({c[i], c[(i + 1) % c.size()]}).second;
    add(check::kCoherent, ok);
  }
  if (p.family() == Family::Lobell) {
    std::string bad;
    for (int v = 0; v < p.vertex_count(); ++v)
      if (p.vertex_degree(v) != 3) bad = p.vertex_label(v) + " has degree " + std::to_string(p.vertex_degree(v));
    add(check::kTrivalent, bad.empty(), bad);
    bad.clear();
    for (int f = 0; f < p.face_count(); ++f)
      if (p.face(f).size() < 5) bad = "face " + p.face_label(f) + " has " + std::to_string(p.face(f).size()) + " sides";
    add(check::kFacesAtLeast5, bad.empty(), bad);
  } else {
    std::string bad;
    for (int f = 0; f < p.face_count(); ++f)
      if (p.face(f).size() != 3) bad = "face " + p.face_label(f);
    add(check::kTriangles, bad.empty(), bad);
  }
  return r;
}

nlohmann::ordered_json to_json(const CombinatorialPolytope& p) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(p.family());
  doc["n"] = p.n();
  auto faces = nlohmann::ordered_json::array();
  for (const auto& c : p.faces()) {
    auto labels = nlohmann::ordered_json::array();
    for (int v : c) labels.push_back(p.vertex_label(v));
    faces.push_back(std::move(labels));
  }
  doc["faces"] = std::move(faces);
  auto face_labels = nlohmann::ordered_json::object();
  for (int f = 0; f < p.face_count(); ++f) face_labels[p.face_label(f)] = f;
  doc["faceLabels"] = std::move(face_labels);
  return doc;
}

CombinatorialPolytope polytope_from_json(const nlohmann::json& doc) {
  try {
    const Family family = parse_family(doc.at("family").get<std::string>());
    const int n = doc.at("n").get<int>();
    std::vector<std::string> vlabels;
    std::map<std::string, int> vindex;
    std::vector<std::vector<int>> faces;
    for (const auto& face : doc.at("faces")) {
      std::vector<int> cyc;
      for (const auto& label : face) {
        const auto s = label.get<std::string>();
        auto [it, fresh] = vindex.try_emplace(s, static_cast<int>(vlabels.size()));
        if (fresh) vlabels.push_back(s);
        cyc.push_back(it->second);
      }
      faces.push_back(std::move(cyc));
    }
    std::vector<std::string> flabels(faces.size());
    for (const auto& [label, idx] : doc.at("faceLabels").items()) {
      const int f = idx.get<int>();
      if (f < 0 || f >= static_cast<int>(faces.size()))
        throw ParseError("/faceLabels/" + label, "face index out of range");
      flabels[f] = label;
    }
    return CombinatorialPolytope(family, n, std::move(vlabels), std::move(faces), std::move(flabels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("polytope", e.what());
  }
}

}  // namespace hyp
