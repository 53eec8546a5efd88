#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypbounds/polytope.hpp"
#include "hypbounds/presentation.hpp"

namespace hyp {

/// Element of (Z/2)^3; coordinate i is bit i. Addition is XOR.
class Z2Vector3 {
 public:
  constexpr Z2Vector3() = default;
  constexpr Z2Vector3(int x, int y, int z)
      : bits_(static_cast<std::uint8_t>((x & 1) | (y & 1) << 1 | (z & 1) << 2)) {}

  static constexpr Z2Vector3 from_bits(unsigned b) { return Z2Vector3(b & 1, (b >> 1) & 1, (b >> 2) & 1); }

  constexpr unsigned bits() const { return bits_; }
  constexpr int operator[](int i) const { return (bits_ >> i) & 1; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr Z2Vector3 operator+(Z2Vector3 a, Z2Vector3 b) { return from_bits(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Z2Vector3, Z2Vector3) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr Z2Vector3 kAlpha{1, 0, 0};
inline constexpr Z2Vector3 kBeta{0, 1, 0};
inline constexpr Z2Vector3 kGamma{0, 0, 1};
inline constexpr Z2Vector3 kDelta{1, 1, 1};
inline constexpr std::array<Z2Vector3, 4> kColors = {kAlpha, kBeta, kGamma, kDelta};

bool is_distinguished(Z2Vector3 v);
// "alpha" | "beta" | "gamma" | "delta"; DomainError for anything else.
std::string_view color_name(Z2Vector3 v);
Z2Vector3 parse_color(std::string_view name);

// Dimension of the Z/2-span.
int rank(std::span<const Z2Vector3> vectors);
bool linearly_independent(Z2Vector3 a, Z2Vector3 b, Z2Vector3 c);

/// A coloring of the faces of R(n) by α, β, γ, δ. It is the whole data of
/// the homomorphism from the reflection group G(n) to (Z/2)^3: generator
/// g_k is sent to the color of face k.
struct FaceColoring {
  std::shared_ptr<const CombinatorialPolytope> polytope;
  std::vector<Z2Vector3> colors;  // by face index

  int n() const { return polytope->n(); }
  Z2Vector3 color(int face) const { return colors.at(face); }
};

struct ColoringReport {
  bool proper = false;             // faces sharing an edge differ
  bool vertex_independent = false; // the three colors at each vertex are independent
  bool surjective = false;         // colors used span (Z/2)^3
  std::string detail;

  bool valid() const { return proper && vertex_independent && surjective; }
};

/// Throws DomainError if a face is uncolored or carries a vector outside
/// {α, β, γ, δ}.
ColoringReport validate_coloring(const FaceColoring& c);

/// Valid colorings in lexicographic order (faces by increasing index,
/// colors tried α, β, γ, δ). Stops after `limit` results when given.
std::vector<FaceColoring> enumerate_colorings(std::shared_ptr<const CombinatorialPolytope> p,
                                              std::optional<std::size_t> limit = std::nullopt);

// First coloring in enumeration order. DomainError if none exists.
FaceColoring canonical_coloring(int n);

/// The coloring of R(6) that yields the classical Löbell manifold:
/// faces 13, 14 get α and faces 1..12 get β γ δ β γ δ γ δ β γ δ β.
FaceColoring classical_lobell_coloring();

// Image of a word in the generators g_1..g_{2n+2} (exponents are irrelevant
// modulo 2).
Z2Vector3 evaluate_word(const FaceColoring& c, const Word& word);

// Relabel colors by the linear automorphism of (Z/2)^3 permuting α, β, γ, δ
// as given (image[k] is the image of kColors[k]).
FaceColoring permute_colors(const FaceColoring& c, const std::array<Z2Vector3, 4>& image);

nlohmann::ordered_json to_json(const FaceColoring& c);
FaceColoring coloring_from_json(const nlohmann::json& doc);

}  // namespace hyp
