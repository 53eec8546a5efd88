#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hypbounds/coloring.hpp"
#include "hypbounds/manifold_report.hpp"
#include "hypbounds/polytope.hpp"

namespace hyp {

struct Cell {
  int copy = 0;
  int face = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Match {
  Cell from;
  Cell to;
  // (v, w): vertex v of the source face goes to vertex w of the target face.
  std::vector<std::pair<int, int>> vertex_map;

  int image(int v) const;
};

/// Involution on the faces of a collection of polytope copies. Adding a
/// match registers both directions.
class FacePairing {
 public:
  FacePairing(int copies, int faces_per_copy);

  int copies() const { return copies_; }
  int faces_per_copy() const { return faces_per_copy_; }

  // Throws StructuralError if either cell is already matched.
  void add(Cell from, Cell to, std::vector<std::pair<int, int>> vertex_map);
  // Replaces an existing match in both directions.
  void replace(Cell from, Cell to, std::vector<std::pair<int, int>> vertex_map);

  const Match* match(Cell c) const;
  std::vector<Match> matches() const;  // one entry per pair, from < to

 private:
  int slot(Cell c) const;

  int copies_;
  int faces_per_copy_;
  std::vector<std::optional<Match>> slots_;
};

struct CopyEdge {
  int copy = 0;
  int edge = 0;

  friend auto operator<=>(const CopyEdge&, const CopyEdge&) = default;
};

/// Copies of one polytope glued by a face pairing, with the quotient cell
/// structure computed.
class GluedComplex {
 public:
  // Throws StructuralError if a match is not a bijection of face vertices
  // carrying face edges to face edges. Unmatched faces are allowed here and
  // reported by verify_closed_manifold().
  GluedComplex(CombinatorialPolytope polytope, std::vector<int> orientation, FacePairing pairing);

  const CombinatorialPolytope& polytope() const { return polytope_; }
  int copies() const { return static_cast<int>(orientation_.size()); }
  int orientation(int copy) const { return orientation_.at(copy); }
  const FacePairing& pairing() const { return pairing_; }

  int vertex_class(int copy, int v) const { return vertex_class_.at(copy * polytope_.vertex_count() + v); }
  int edge_class(CopyEdge e) const { return edge_class_.at(e.copy * polytope_.edge_count() + e.edge); }
  int quotient_vertices() const { return quotient_vertices_; }
  int quotient_edges() const { return quotient_edges_; }
  int quotient_faces() const { return quotient_faces_; }
  bool all_faces_matched() const { return unmatched_ == 0; }
  bool edges_valid() const { return edges_valid_; }

 private:
  CombinatorialPolytope polytope_;
  std::vector<int> orientation_;
  FacePairing pairing_;
  std::vector<int> vertex_class_;
  std::vector<int> edge_class_;
  int quotient_vertices_ = 0;
  int quotient_edges_ = 0;
  int quotient_faces_ = 0;
  int unmatched_ = 0;
  bool edges_valid_ = true;
};

/// Eight copies of R(n), one per element g of (Z/2)^3 (copy index = bits of
/// g), with copy g glued to copy g + color(F) across face F by the identity.
/// Copy g carries orientation (-1)^(g1+g2+g3).
GluedComplex assemble_lobell(const FaceColoring& c);

/// s_i: F_i -> F_i* for i = 1..2n, sending (Q or R, P_{i+1}, P_{i+3}) to
/// (P_{i+2}, P_{i+3}, P_{i+4}) in order.
FacePairing fibonacci_pairing(int n);
GluedComplex assemble_fibonacci(int n);

struct CycleStep {
  Cell from;
  Cell to;
};

struct EdgeCycle {
  std::vector<CopyEdge> edges;
  std::vector<CycleStep> steps;  // steps[k] carries edges[k] to edges[k+1] (cyclically)
};

/// One cycle per quotient edge. Each starts at its least (copy, edge) and
/// leaves through the lower-indexed face first. Throws StructuralError if a
/// face is unmatched or a cycle returns with its endpoints moved.
std::vector<EdgeCycle> edge_cycles(const GluedComplex& x);

/// Quotient cell counts and Euler characteristic, vertex links, edge
/// validity, and orientation compatibility of every match. Never throws.
ManifoldReport verify_closed_manifold(const GluedComplex& x);

nlohmann::ordered_json to_json(const GluedComplex& x);

}  // namespace hyp
