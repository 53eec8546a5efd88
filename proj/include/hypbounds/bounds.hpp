#pragma once

#include <json.hpp>

#include "hypbounds/polytope.hpp"
#include "hypbounds/volume.hpp"

namespace hyp {

/// Two-sided bounds on the complexity c(M) of a Löbell manifold of order n
/// or of the Fibonacci manifold M(n). c(M) itself is never computed.
///
/// upper_bound is the size of an explicit triangulation. lower_bound is the
/// certified consequence of vol(M) < c(M)·v3 at this particular n.
/// asymptotic_lower is 10n (Löbell) or 2n (Fibonacci), the form the lower
/// bound takes for large n; asymptotic_reached says whether lower_bound has
/// reached it here.
struct BoundsReport {
  Family family = Family::Lobell;
  long n = 0;
  VolumeResult volume;
  long lower_bound = 0;
  long upper_bound = 0;
  long asymptotic_lower = 0;
  bool asymptotic_reached = false;
  double volume_over_upper_v3 = 0.0;  // vol / (v3 · upper)
  double lower_over_upper = 0.0;
};

/// Least k with k·v3 > vol, evaluated so that numerical error can only make
/// k smaller: uses (vol - error) / (v3 + v3 error). DomainError unless
/// vol > 0.
long lower_bound_from_volume(const VolumeResult& v);

// 32(2n-1) and 3n.
long lobell_upper_formula(long n);
long fibonacci_upper_formula(long n);

/// Builds the family's triangulation (Löbell: canonical coloring) and
/// checks its size against the closed formula (StructuralError on mismatch).
BoundsReport bounds_report(Family family, long n);

nlohmann::ordered_json to_json(const BoundsReport& r);

}  // namespace hyp
