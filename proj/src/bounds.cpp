#include "hypbounds/bounds.hpp"

#include <cmath>

#include "hypbounds/coloring.hpp"
#include "hypbounds/errors.hpp"
#include "hypbounds/triangulation.hpp"

namespace hyp {

long lower_bound_from_volume(const VolumeResult& v) {
  if (!(v.value > 0.0)) throw DomainError("volume must be positive");
  const Estimate tet = v3_estimate();
  const double ratio = (v.value - v.error_bound) / (tet.value + tet.error);
  return static_cast<long>(std::floor(ratio)) + 1;
}

long lobell_upper_formula(long n) { return 32 * (2 * n - 1); }
long fibonacci_upper_formula(long n) { return 3 * n; }

BoundsReport bounds_report(Family family, long n) {
  BoundsReport r;
  r.family = family;
  r.n = n;
  long expected = 0;
  if (family == Family::Lobell) {
    r.volume = lobell_volume(n);
    r.upper_bound = triangulate_lobell(canonical_coloring(static_cast<int>(n))).size();
    r.asymptotic_lower = 10 * n;
    expected = lobell_upper_formula(n);
  } else {
    r.volume = fibonacci_volume(n);
    r.upper_bound = triangulate_fibonacci(static_cast<int>(n)).size();
    r.asymptotic_lower = 2 * n;
    expected = fibonacci_upper_formula(n);
  }
  if (r.upper_bound != expected)
    throw StructuralError("triangulation has " + std::to_string(r.upper_bound) + " tetrahedra, expected " +
                          std::to_string(expected));
  r.lower_bound = lower_bound_from_volume(r.volume);
  r.asymptotic_reached = r.lower_bound >= r.asymptotic_lower;
  r.volume_over_upper_v3 = r.volume.value / (v3() * static_cast<double>(r.upper_bound));
  r.lower_over_upper = static_cast<double>(r.lower_bound) / static_cast<double>(r.upper_bound);
  return r;
}

nlohmann::ordered_json to_json(const BoundsReport& r) {
  nlohmann::ordered_json doc;
  doc["family"] = family_name(r.family);
  doc["n"] = r.n;
  nlohmann::ordered_json vol;
  vol["value"] = r.volume.value;
  vol["errorBound"] = r.volume.error_bound;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.volume.parameters) params[k] = v;
  vol["parameters"] = std::move(params);
  doc["volume"] = std::move(vol);
  doc["lower"] = r.lower_bound;
  doc["upper"] = r.upper_bound;
  doc["asymptoticLower"] = r.asymptotic_lower;
  doc["asymptoticReached"] = r.asymptotic_reached;
  doc["ratios"] = {{"volumeOverUpperV3", r.volume_over_upper_v3}, {"lowerOverUpper", r.lower_over_upper}};
  return doc;
}

}  // namespace hyp
