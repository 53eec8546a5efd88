#include "hypbounds/coloring.hpp"

#include <algorithm>

#include "hypbounds/errors.hpp"

namespace hyp {

bool is_distinguished(Z2Vector3 v) {
  return std::find(kColors.begin(), kColors.end(), v) != kColors.end();
}

std::string_view color_name(Z2Vector3 v) {
  if (v == kAlpha) return "alpha";
  if (v == kBeta) return "beta";
  if (v == kGamma) return "gamma";
  if (v == kDelta) return "delta";
  throw DomainError("vector (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                    std::to_string(v[2]) + ") is not one of alpha, beta, gamma, delta");
}

Z2Vector3 parse_color(std::string_view name) {
  for (auto c : kColors)
    if (color_name(c) == name) return c;
  throw DomainError("unknown color '" + std::string(name) + "'");
}

int rank(std::span<const Z2Vector3> vectors) {
  // Size of the span is 2^rank.
  unsigned span = 1u;  // bitset over the 8 elements, {0} to start
  for (auto v : vectors) {
    unsigned next = span;
    for (unsigned x = 0; x < 8; ++x)
      if (span >> x & 1u) next |= 1u << (x ^ v.bits());
    span = next;
  }
  const int size = __builtin_popcount(span);
  return size == 1 ? 0 : size == 2 ? 1 : size == 4 ? 2 : 3;
}

bool linearly_independent(Z2Vector3 a, Z2Vector3 b, Z2Vector3 c) {
  const std::array<Z2Vector3, 3> v{a, b, c};
  return rank(v) == 3;
}

ColoringReport validate_coloring(const FaceColoring& c) {
  if (!c.polytope) throw DomainError("coloring has no polytope");
  const auto& p = *c.polytope;
  if (static_cast<int>(c.colors.size()) != p.face_count())
    throw DomainError("coloring covers " + std::to_string(c.colors.size()) + " faces, polytope has " +
                      std::to_string(p.face_count()));
  for (int f = 0; f < p.face_count(); ++f)
    if (!is_distinguished(c.colors[f]))
      throw DomainError("face " + p.face_label(f) + " colored outside {alpha, beta, gamma, delta}");

  ColoringReport r;
  r.proper = true;
  for (const auto& e : p.edges()) {
    if (e.faces.size() == 2 && c.colors[e.faces[0]] == c.colors[e.faces[1]]) {
      r.proper = false;
      r.detail = "faces " + p.face_label(e.faces[0]) + " and " + p.face_label(e.faces[1]) + " share a color";
      break;
    }
  }
  r.vertex_independent = true;
  for (int v = 0; v < p.vertex_count(); ++v) {
    std::vector<Z2Vector3> around;
    for (int f : p.faces_at_vertex(v)) around.push_back(c.colors[f]);
    if (around.size() != 3 || rank(around) != 3) {
      r.vertex_independent = false;
      if (r.detail.empty()) r.detail = "colors at vertex " + p.vertex_label(v) + " are dependent";
      break;
    }
  }
  r.surjective = rank(c.colors) == 3;
  if (!r.surjective && r.detail.empty()) r.detail = "colors do not span (Z/2)^3";
  return r;
}

std::vector<FaceColoring> enumerate_colorings(std::shared_ptr<const CombinatorialPolytope> p,
                                              std::optional<std::size_t> limit) {
  std::vector<FaceColoring> out;
  if (limit && *limit == 0) return out;
  const int nf = p->face_count();

  // Neighbors with smaller index; faces are colored in increasing order.
  std::vector<std::vector<int>> earlier(nf);
  for (const auto& e : p->edges()) {
    if (e.faces.size() != 2) continue;
    earlier[std::max(e.faces[0], e.faces[1])].push_back(std::min(e.faces[0], e.faces[1]));
  }

  std::vector<int> choice(nf, -1);
  std::vector<Z2Vector3> colors(nf);
  int f = 0;
  while (f >= 0) {
    if (f == nf) {
      FaceColoring c{p, colors};
      if (validate_coloring(c).valid()) {
        out.push_back(std::move(c));
        if (limit && out.size() >= *limit) break;
      }
      --f;
      continue;
    }
    bool placed = false;
    while (++choice[f] < 4) {
      const auto col = kColors[choice[f]];
      if (std::none_of(earlier[f].begin(), earlier[f].end(), [&](int g) { return colors[g] == col; })) {
        colors[f] = col;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++f;
    } else {
      choice[f] = -1;
      --f;
    }
  }
  return out;
}

FaceColoring canonical_coloring(int n) {
  auto p = std::make_shared<const CombinatorialPolytope>(build_lobell_polytope(n));
  auto found = enumerate_colorings(p, 1);
  if (found.empty()) throw DomainError("R(" + std::to_string(n) + ") admits no valid coloring");
  return std::move(found.front());
}

FaceColoring classical_lobell_coloring() {
  auto p = std::make_shared<const CombinatorialPolytope>(build_lobell_polytope(6));
  const std::array<Z2Vector3, 14> by_label = {kBeta, kGamma, kDelta, kBeta, kGamma, kDelta, kGamma,
                                              kDelta, kBeta, kGamma, kDelta, kBeta, kAlpha, kAlpha};
  return FaceColoring{p, {by_label.begin(), by_label.end()}};
}

Z2Vector3 evaluate_word(const FaceColoring& c, const Word& word) {
  Z2Vector3 sum;
  for (const auto& l : word) sum = sum + c.colors.at(l.generator);
  return sum;
}

FaceColoring permute_colors(const FaceColoring& c, const std::array<Z2Vector3, 4>& image) {
  FaceColoring out = c;
  for (auto& col : out.colors) {
    const auto k = std::find(kColors.begin(), kColors.end(), col) - kColors.begin();
    if (k == 4) throw DomainError("coloring uses a color outside {alpha, beta, gamma, delta}");
    col = image[k];
  }
  return out;
}

nlohmann::ordered_json to_json(const FaceColoring& c) {
  nlohmann::ordered_json doc;
  doc["n"] = c.n();
  auto colors = nlohmann::ordered_json::object();
  for (int f = 0; f < static_cast<int>(c.colors.size()); ++f)
    colors[c.polytope->face_label(f)] = color_name(c.colors[f]);
  doc["colors"] = std::move(colors);
  return doc;
}

FaceColoring coloring_from_json(const nlohmann::json& doc) {
  int n = 0;
  try {
    n = doc.at("n").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("/n", e.what());
  }
  auto p = std::make_shared<const CombinatorialPolytope>(build_lobell_polytope(n));
  FaceColoring c{p, std::vector<Z2Vector3>(p->face_count())};
  std::vector<bool> seen(p->face_count(), false);
  if (!doc.contains("colors") || !doc["colors"].is_object()) throw ParseError("/colors", "expected an object");
  for (const auto& [label, value] : doc["colors"].items()) {
    const auto f = p->face_index(label);
    if (!f) throw ParseError("/colors/" + label, "no such face of R(" + std::to_string(n) + ")");
    if (!value.is_string()) throw ParseError("/colors/" + label, "expected a color name");
    try {
      c.colors[*f] = parse_color(value.get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError("/colors/" + label, e.what());
    }
    seen[*f] = true;
  }
  for (int f = 0; f < p->face_count(); ++f)
    if (!seen[f]) throw ParseError("/colors", "face " + p->face_label(f) + " is not colored");
  return c;
}

}  // namespace hyp
