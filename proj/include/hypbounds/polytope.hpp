#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hyp {

enum class Family { Lobell, Fibonacci };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct PolytopeEdge {
  std::array<int, 2> vertices;  // vertices[0] < vertices[1]
  std::vector<int> faces;       // exactly two for a valid polytope, ascending
};

/// Abstract 3-polytope given by its faces as cyclic vertex sequences.
///
/// Vertices and faces are addressed by 0-based indices; the human-facing
/// labels ("U3", "P5", "12", "F3*", ...) are kept alongside. Edges and
/// incidences are derived on construction and never assumed valid, so a
/// broken polytope can still be built and handed to validate_polytope().
class CombinatorialPolytope {
 public:
  CombinatorialPolytope(Family family, int n, std::vector<std::string> vertex_labels,
                        std::vector<std::vector<int>> faces, std::vector<std::string> face_labels);

  Family family() const { return family_; }
  int n() const { return n_; }

  int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& face(int f) const { return faces_.at(f); }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<PolytopeEdge>& edges() const { return edges_; }
  const PolytopeEdge& edge(int e) const { return edges_.at(e); }

  const std::string& vertex_label(int v) const { return vertex_labels_.at(v); }
  const std::string& face_label(int f) const { return face_labels_.at(f); }
  std::optional<int> vertex_index(std::string_view label) const;
  std::optional<int> face_index(std::string_view label) const;

  std::optional<int> edge_index(int u, int v) const;
  const std::vector<int>& faces_at_vertex(int v) const { return vertex_faces_.at(v); }
  const std::vector<int>& edges_at_vertex(int v) const { return vertex_edges_.at(v); }
  int vertex_degree(int v) const { return static_cast<int>(vertex_edges_.at(v).size()); }

  // Position of v in the cyclic sequence of face f, or -1.
  int position_in_face(int f, int v) const;

 private:
  Family family_;
  int n_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::string> face_labels_;
  std::vector<PolytopeEdge> edges_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<std::vector<int>> vertex_edges_;
};

/// Löbell polytope R(n), n >= 5: faces 1..n form the upper pentagon ring,
/// n+1..2n the lower ring (face n+1 touches 1 and n), 2n+1 is the upper
/// n-gon and 2n+2 the lower one. Face label k has index k-1.
///
/// Vertices come in four rings of n: U (upper base), A (upper-mid),
/// B (lower-mid), D (lower base), indexed ring*n + position.
CombinatorialPolytope build_lobell_polytope(int n);

/// Y(n), n >= 4: the order-n antiprism with a pyramid on each base.
/// Vertices Q=0, R=1, P_i=i+1. Faces F_i (index i-1) and F_i* (index 2n+i-1)
/// for i = 1..2n, where F_i = (Q or R, P_{i+1}, P_{i+3}) with Q for odd i
/// and F_i* = (P_{i+2}, P_{i+3}, P_{i+4}).
CombinatorialPolytope build_fibonacci_polytope(int n);

// 1-based P subscript reduced into 1..2n.
int wrap_index(int i, int period);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool passed() const;
  const ValidationCheck* find(std::string_view name) const;
};

namespace check {
inline constexpr std::string_view kNoRepeatedVertex = "faces have no repeated vertex";
inline constexpr std::string_view kEdgeInTwoFaces = "every edge in exactly two faces";
inline constexpr std::string_view kEuler = "euler characteristic is 2";
inline constexpr std::string_view kConnected = "face adjacency graph connected";
inline constexpr std::string_view kCoherent = "faces coherently oriented";
inline constexpr std::string_view kTrivalent = "vertices trivalent";
inline constexpr std::string_view kFacesAtLeast5 = "faces have at least 5 sides";
inline constexpr std::string_view kTriangles = "faces are triangles";
}  // namespace check

/// Generic checks, plus the right-angled (Andreev) combinatorial conditions
/// for Löbell polytopes and all-triangles for Fibonacci ones. Never throws.
ValidationReport validate_polytope(const CombinatorialPolytope& p);

nlohmann::ordered_json to_json(const CombinatorialPolytope& p);
CombinatorialPolytope polytope_from_json(const nlohmann::json& doc);

}  // namespace hyp
