#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hyp {

struct VertexLink {
  int vertex = 0;  // quotient vertex class
  int corners = 0; // link 2-cells
  int euler = 0;
  bool connected = false;

  bool is_sphere() const { return connected && euler == 2; }
};

/// Outcome of the closed-orientable-3-manifold checks shared by glued
/// polytope complexes and triangulations. When the gluing data itself is
/// inconsistent the later fields are left at their defaults.
struct ManifoldReport {
  bool gluing_consistent = false;
  std::string gluing_problem;

  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int cells = 0;
  long euler = 0;

  bool edges_valid = false;  // no edge identified with itself reversed
  std::vector<VertexLink> links;
  bool links_are_spheres = false;
  bool orientable = false;

  bool closed_orientable_manifold() const {
    return gluing_consistent && euler == 0 && edges_valid && links_are_spheres && orientable;
  }
};

std::string to_text(const ManifoldReport& r);
nlohmann::ordered_json to_json(const ManifoldReport& r);

}  // namespace hyp
