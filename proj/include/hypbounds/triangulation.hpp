#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypbounds/coloring.hpp"
#include "hypbounds/gluing.hpp"
#include "hypbounds/manifold_report.hpp"

namespace hyp {

// perm[i] is the image of vertex i.
using Perm4 = std::array<int, 4>;

Perm4 inverse(const Perm4& p);
int sign(const Perm4& p);
bool is_permutation(const Perm4& p);

/// Face f of some tetrahedron (the face opposite vertex f) is glued to face
/// `face` of `tet` via `perm`, which carries f to `face` and the other
/// three vertices onto the vertices of the target face.
struct FaceGluing {
  int tet = -1;
  int face = -1;
  Perm4 perm{0, 1, 2, 3};

  friend bool operator==(const FaceGluing&, const FaceGluing&) = default;
};

/// Closed singular triangulation: every face of every tetrahedron carries a
/// gluing. The table is taken as given; structural_problems() lists
/// anything that makes it inconsistent.
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::vector<std::array<FaceGluing, 4>> gluings) : gluings_(std::move(gluings)) {}

  int size() const { return static_cast<int>(gluings_.size()); }
  const FaceGluing& gluing(int tet, int face) const { return gluings_.at(tet).at(face); }
  void set_gluing(int tet, int face, FaceGluing g) { gluings_.at(tet).at(face) = g; }
  const std::vector<std::array<FaceGluing, 4>>& gluings() const { return gluings_; }

  // Empty when every gluing is in range, is a permutation carrying f to the
  // target face, and is matched by the inverse gluing on the other side.
  std::vector<std::string> structural_problems() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<std::array<FaceGluing, 4>> gluings_;
};

/// Fan every face of every copy from its least vertex and cone each copy
/// from a fresh interior apex. Tetrahedron vertices are (apex, c0, c_k,
/// c_{k+1}) for the fan triangle (c0, c_k, c_{k+1}); tetrahedra are ordered
/// by copy, then face, then fan position. Throws StructuralError if a match
/// does not carry the fan of one face onto the fan of its partner.
Triangulation cone_triangulation(const GluedComplex& x);

/// 32(2n-1) tetrahedra: 8 copies of R(n), 4(2n-1) per copy.
Triangulation triangulate_lobell(const FaceColoring& c);

/// 3n tetrahedra: the cone from Q over each face of Y(n) missing Q, in face
/// index order, vertices (Q, face cycle from its least vertex). A cone face
/// that coincides with a Q-face F_i is glued via s_i to the base over F_i*.
Triangulation triangulate_fibonacci(int n);

/// Structure, Euler characteristic, edge validity, vertex links and
/// orientability of the triangulated space. Never throws.
ManifoldReport verify_triangulation(const Triangulation& t);

/// {"tetCount": N, "gluings": [[[t, f, [p0, p1, p2, p3]] x4] xN]}
nlohmann::ordered_json export_triangulation(const Triangulation& t);
Triangulation import_triangulation(const nlohmann::json& doc);
// Parses text first; JSON syntax errors become ParseError at "/".
Triangulation import_triangulation(const std::string& text);

}  // namespace hyp
