#include "hypbounds/gluing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hypbounds/errors.hpp"
#include "union_find.hpp"

namespace hyp {

int Match::image(int v) const {
  for (const auto& [a, b] : vertex_map)
    if (a == v) return b;
  return -1;
}

FacePairing::FacePairing(int copies, int faces_per_copy)
    : copies_(copies), faces_per_copy_(faces_per_copy), slots_(static_cast<size_t>(copies) * faces_per_copy) {}

int FacePairing::slot(Cell c) const {
  if (c.copy < 0 || c.copy >= copies_ || c.face < 0 || c.face >= faces_per_copy_)
    throw StructuralError("cell (" + std::to_string(c.copy) + "," + std::to_string(c.face) + ") out of range");
  return c.copy * faces_per_copy_ + c.face;
}

void FacePairing::add(Cell from, Cell to, std::vector<std::pair<int, int>> vertex_map) {
  if (slots_[slot(from)] || slots_[slot(to)])
    throw StructuralError("face (" + std::to_string(from.copy) + "," + std::to_string(from.face) +
                          ") or its partner is already matched");
  replace(from, to, std::move(vertex_map));
}

void FacePairing::replace(Cell from, Cell to, std::vector<std::pair<int, int>> vertex_map) {
  std::vector<std::pair<int, int>> inverse;
  for (const auto& [a, b] : vertex_map) inverse.emplace_back(b, a);
  std::sort(inverse.begin(), inverse.end());
  slots_[slot(to)] = Match{to, from, std::move(inverse)};
  slots_[slot(from)] = Match{from, to, std::move(vertex_map)};
}

const Match* FacePairing::match(Cell c) const {
  const auto& s = slots_[slot(c)];
  return s ? &*s : nullptr;
}

std::vector<Match> FacePairing::matches() const {
  std::vector<Match> out;
  for (const auto& s : slots_)
    if (s && s->from <= s->to) out.push_back(*s);
  return out;
}

namespace {

std::string cell_name(const CombinatorialPolytope& p, Cell c) {
  return "copy " + std::to_string(c.copy) + " face " + p.face_label(c.face);
}

// +1 if the map carries the cyclic order of the source face to that of the
// target face, -1 if it reverses it. Throws if it is not a symmetry of the
// polygon.
int map_direction(const CombinatorialPolytope& p, const Match& m) {
  const auto& src = p.face(m.from.face);
  const auto& dst = p.face(m.to.face);
  const int k = static_cast<int>(src.size());
  if (static_cast<int>(dst.size()) != k || static_cast<int>(m.vertex_map.size()) != k)
    throw StructuralError(cell_name(p, m.from) + ": vertex map size does not match the faces");
  std::vector<int> pos(k);
  std::set<int> hit;
  for (int i = 0; i < k; ++i) {
    const int w = m.image(src[i]);
    pos[i] = p.position_in_face(m.to.face, w);
    if (pos[i] < 0 || !hit.insert(pos[i]).second)
      throw StructuralError(cell_name(p, m.from) + ": vertex map is not a bijection onto " + cell_name(p, m.to));
  }
  const int step = ((pos[1 % k] - pos[0]) % k + k) % k;
  const int dir = step == 1 ? 1 : step == k - 1 ? -1 : 0;
  for (int i = 0; dir != 0 && i < k; ++i)
    if (((pos[(i + 1) % k] - pos[i]) % k + k) % k != (dir == 1 ? 1 : k - 1))
      throw StructuralError(cell_name(p, m.from) + ": vertex map does not preserve the face's edges");
  if (dir == 0) throw StructuralError(cell_name(p, m.from) + ": vertex map does not preserve the face's edges");
  return dir;
}

}  // namespace

GluedComplex::GluedComplex(CombinatorialPolytope polytope, std::vector<int> orientation, FacePairing pairing)
    : polytope_(std::move(polytope)), orientation_(std::move(orientation)), pairing_(std::move(pairing)) {
  const auto& p = polytope_;
  const int nc = copies();
  if (pairing_.copies() != nc || pairing_.faces_per_copy() != p.face_count())
    throw StructuralError("pairing shape does not match the copies");
  const int nv = p.vertex_count(), ne = p.edge_count();

  detail::UnionFind verts(nc * nv), edges(nc * ne);
  int matched = 0, self_matched = 0;
  for (int c = 0; c < nc; ++c) {
    for (int f = 0; f < p.face_count(); ++f) {
      const Match* m = pairing_.match({c, f});
      if (!m) {
        ++unmatched_;
        continue;
      }
      ++matched;
      if (m->to == m->from) ++self_matched;
      map_direction(p, *m);
      const auto& cyc = p.face(f);
      const int k = static_cast<int>(cyc.size());
      for (int i = 0; i < k; ++i) {
        const int u = cyc[i], w = cyc[(i + 1) % k];
        const int fu = m->image(u), fw = m->image(w);
        verts.unite(c * nv + u, m->to.copy * nv + fu);
        const int e = *p.edge_index(u, w);
        const auto fe = p.edge_index(fu, fw);
        if (!fe) throw StructuralError(cell_name(p, m->from) + ": edge does not map to an edge");
        const int rel = (p.edge(e).vertices[0] == u ? 0 : 1) ^ (p.edge(*fe).vertices[0] == fu ? 0 : 1);
        if (!edges.unite(c * ne + e, m->to.copy * ne + *fe, rel)) edges_valid_ = false;
      }
    }
  }
  vertex_class_ = verts.classes(quotient_vertices_);
  edge_class_ = edges.classes(quotient_edges_);
  quotient_faces_ = (matched - self_matched) / 2 + self_matched + unmatched_;
}

GluedComplex assemble_lobell(const FaceColoring& c) {
  const auto report = validate_coloring(c);
  if (!report.valid()) throw DomainError("invalid coloring: " + report.detail);
  const auto& p = *c.polytope;
  FacePairing pairing(8, p.face_count());
  std::vector<int> orientation(8);
  for (unsigned g = 0; g < 8; ++g) {
    orientation[g] = __builtin_popcount(g) % 2 == 0 ? 1 : -1;
    for (int f = 0; f < p.face_count(); ++f) {
      const unsigned h = g ^ c.color(f).bits();
      if (h < g) continue;
      std::vector<std::pair<int, int>> identity;
      for (int v : p.face(f)) identity.emplace_back(v, v);
      pairing.add({static_cast<int>(g), f}, {static_cast<int>(h), f}, std::move(identity));
    }
  }
  return GluedComplex(p, std::move(orientation), std::move(pairing));
}

FacePairing fibonacci_pairing(int n) {
  const auto y = build_fibonacci_polytope(n);
  const int m = 2 * n;
  auto P = [m](int i) { return wrap_index(i, m) + 1; };
  FacePairing pairing(1, y.face_count());
  for (int i = 1; i <= m; ++i) {
    const int apex = i % 2 == 1 ? 0 : 1;
    pairing.add({0, i - 1}, {0, m + i - 1},
                {{apex, P(i + 2)}, {P(i + 1), P(i + 3)}, {P(i + 3), P(i + 4)}});
  }
  return pairing;
}

GluedComplex assemble_fibonacci(int n) {
  return GluedComplex(build_fibonacci_polytope(n), {1}, fibonacci_pairing(n));
}

std::vector<EdgeCycle> edge_cycles(const GluedComplex& x) {
  const auto& p = x.polytope();
  const int ne = p.edge_count();
  std::vector<bool> seen(static_cast<size_t>(x.copies()) * ne, false);
  auto id = [ne](CopyEdge e) { return e.copy * ne + e.edge; };
  auto name = [&p](CopyEdge e) {
    const auto& v = p.edge(e.edge).vertices;
    return "copy " + std::to_string(e.copy) + " edge " + p.vertex_label(v[0]) + p.vertex_label(v[1]);
  };

  std::vector<EdgeCycle> cycles;
  for (int c = 0; c < x.copies(); ++c) {
    for (int e = 0; e < ne; ++e) {
      const CopyEdge start{c, e};
      if (seen[id(start)]) continue;
      const auto& se = p.edge(e);
      if (se.faces.size() != 2) throw StructuralError(name(start) + " does not lie in two faces");
      const int a0 = se.vertices[0], b0 = se.vertices[1];
      EdgeCycle cyc;
      CopyEdge cur = start;
      int a = a0, b = b0;
      int face = se.faces[0];
      for (;;) {
        seen[id(cur)] = true;
        cyc.edges.push_back(cur);
        const Match* m = x.pairing().match({cur.copy, face});
        if (!m) throw StructuralError(name(cur) + ": face " + p.face_label(face) + " is unmatched");
        const int fa = m->image(a), fb = m->image(b);
        const auto fe = p.edge_index(fa, fb);
        if (!fe) throw StructuralError(name(cur) + " is not carried to an edge");
        cyc.steps.push_back({m->from, m->to});
        const CopyEdge next{m->to.copy, *fe};
        const auto& faces = p.edge(*fe).faces;
        const int other = faces[0] == m->to.face ? faces[1] : faces[0];
        if (next == start) {
          if (fa != a0 || fb != b0 || m->to.face != se.faces[1])
            throw StructuralError("edge cycle through " + name(start) + " does not close: endpoints return as (" +
                                  p.vertex_label(fa) + "," + p.vertex_label(fb) + ")");
          break;
        }
        if (seen[id(next)])
          throw StructuralError("edge cycle through " + name(start) + " runs into " + name(next) + " twice");
        cur = next;
        a = fa;
        b = fb;
        face = other;
      }
      cycles.push_back(std::move(cyc));
    }
  }
  return cycles;
}

ManifoldReport verify_closed_manifold(const GluedComplex& x) {
  ManifoldReport r;
  const auto& p = x.polytope();
  const int nc = x.copies(), nv = p.vertex_count(), ne = p.edge_count();

  r.gluing_consistent = true;
  for (int c = 0; c < nc && r.gluing_consistent; ++c) {
    for (int f = 0; f < p.face_count(); ++f) {
      const Match* m = x.pairing().match({c, f});
      if (!m) {
        r.gluing_consistent = false;
        r.gluing_problem = "unmatched face: " + cell_name(p, {c, f});
        break;
      }
      const Match* back = x.pairing().match(m->to);
      if (!back || back->to != m->from) {
        r.gluing_consistent = false;
        r.gluing_problem = "pairing is not an involution at " + cell_name(p, {c, f});
        break;
      }
    }
  }
  if (!r.gluing_consistent) return r;

  r.vertices = x.quotient_vertices();
  r.edges = x.quotient_edges();
  r.faces = x.quotient_faces();
  r.cells = nc;
  r.euler = static_cast<long>(r.vertices) - r.edges + r.faces - r.cells;
  r.edges_valid = x.edges_valid();

  // Link of each quotient vertex: one polygon per corner (copy, v), with a
  // side per incident face and a corner per incident edge end.
  auto end_id = [&](int c, int e, int v) { return (c * ne + e) * 2 + (p.edge(e).vertices[0] == v ? 0 : 1); };
  detail::UnionFind link_vertices(nc * ne * 2), corners(nc * nv);
  std::vector<int> sides(r.vertices, 0);
  for (int c = 0; c < nc; ++c) {
    for (int f = 0; f < p.face_count(); ++f) {
      const Match* m = x.pairing().match({c, f});
      const auto& cyc = p.face(f);
      const int k = static_cast<int>(cyc.size());
      for (int i = 0; i < k; ++i) {
        const int v = cyc[i];
        ++sides[x.vertex_class(c, v)];
        corners.unite(c * nv + v, m->to.copy * nv + m->image(v));
        for (int w : {cyc[(i + 1) % k], cyc[(i + k - 1) % k]}) {
          const int e = *p.edge_index(v, w);
          const int fe = *p.edge_index(m->image(v), m->image(w));
          link_vertices.unite(end_id(c, e, v), end_id(m->to.copy, fe, m->image(v)));
        }
      }
    }
  }
  std::vector<std::set<int>> link_vertex_roots(r.vertices), corner_roots(r.vertices);
  std::vector<int> corner_count(r.vertices, 0);
  for (int c = 0; c < nc; ++c) {
    for (int v = 0; v < nv; ++v) {
      const int q = x.vertex_class(c, v);
      ++corner_count[q];
      corner_roots[q].insert(corners.find(c * nv + v));
      for (int e : p.edges_at_vertex(v)) link_vertex_roots[q].insert(link_vertices.find(end_id(c, e, v)));
    }
  }
  r.links_are_spheres = true;
  for (int q = 0; q < r.vertices; ++q) {
    VertexLink link;
    link.vertex = q;
    link.corners = corner_count[q];
    link.euler = static_cast<int>(link_vertex_roots[q].size()) - sides[q] / 2 + corner_count[q];
    link.connected = corner_roots[q].size() == 1;
    r.links_are_spheres &= link.is_sphere();
    r.links.push_back(link);
  }

  r.orientable = true;
  for (const auto& m : x.pairing().matches()) {
    const int dir = map_direction(p, m);
    if (x.orientation(m.from.copy) * x.orientation(m.to.copy) * dir != -1) r.orientable = false;
  }
  return r;
}

nlohmann::ordered_json to_json(const GluedComplex& x) {
  nlohmann::ordered_json doc;
  doc["copies"] = x.copies();
  auto pairing = nlohmann::ordered_json::array();
  for (const auto& m : x.pairing().matches()) {
    nlohmann::ordered_json entry;
    entry["from"] = {m.from.copy, m.from.face};
    entry["to"] = {m.to.copy, m.to.face};
    auto vm = nlohmann::ordered_json::array();
    for (const auto& [v, w] : m.vertex_map) vm.push_back({v, w});
    entry["vertexMap"] = std::move(vm);
    pairing.push_back(std::move(entry));
  }
  doc["pairing"] = std::move(pairing);
  return doc;
}

std::string to_text(const ManifoldReport& r) {
  std::ostringstream out;
  if (!r.gluing_consistent) {
    out << "gluing inconsistent: " << r.gluing_problem << '\n';
    out << "closed orientable: no\n";
    return out.str();
  }
  int spheres = 0;
  for (const auto& l : r.links) spheres += l.is_sphere();
  out << "cells: V=" << r.vertices << " E=" << r.edges << " F=" << r.faces << " T=" << r.cells << '\n';
  out << "euler characteristic: " << r.euler << '\n';
  out << "edges valid: " << (r.edges_valid ? "yes" : "no") << '\n';
  out << "vertex links spheres: " << spheres << "/" << r.links.size() << '\n';
  out << "orientable: " << (r.orientable ? "yes" : "no") << '\n';
  out << "closed orientable: " << (r.closed_orientable_manifold() ? "yes" : "no") << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const ManifoldReport& r) {
  nlohmann::ordered_json doc;
  doc["gluingConsistent"] = r.gluing_consistent;
  if (!r.gluing_problem.empty()) doc["gluingProblem"] = r.gluing_problem;
  doc["vertices"] = r.vertices;
  doc["edges"] = r.edges;
  doc["faces"] = r.faces;
  doc["cells"] = r.cells;
  doc["euler"] = r.euler;
  doc["edgesValid"] = r.edges_valid;
  auto links = nlohmann::ordered_json::array();
  for (const auto& l : r.links)
    links.push_back({{"vertex", l.vertex}, {"corners", l.corners}, {"euler", l.euler}, {"connected", l.connected}});
  doc["links"] = std::move(links);
  doc["linksAreSpheres"] = r.links_are_spheres;
  doc["orientable"] = r.orientable;
  doc["closedOrientableManifold"] = r.closed_orientable_manifold();
  return doc;
}

}  // namespace hyp
