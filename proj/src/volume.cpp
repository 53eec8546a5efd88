#include "hypbounds/volume.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "hypbounds/errors.hpp"

namespace hyp {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss–Kronrod 7/15 nodes on [-1, 1] (positive half; last node is 0).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Estimate gauss_kronrod(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double fc = f(mid);
  double kronrod = kWgk[7] * fc, gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double pair = f(mid - dx) + f(mid + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Bisects the worst interval until the summed estimate meets `tol`.
template <class F>
Estimate integrate(F&& f, double a, double b, double tol) {
  struct Piece {
    double a, b;
    Estimate e;
  };
  std::vector<Piece> pieces{{a, b, gauss_kronrod(f, a, b)}};
  for (int iter = 0; iter < 200; ++iter) {
    double total_err = 0.0;
    size_t worst = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
      total_err += pieces[i].e.error;
      if (pieces[i].e.error > pieces[worst].e.error) worst = i;
    }
    if (total_err <= tol) break;
    const Piece w = pieces[worst];
    const double m = 0.5 * (w.a + w.b);
    pieces[worst] = {w.a, m, gauss_kronrod(f, w.a, m)};
    pieces.push_back({m, w.b, gauss_kronrod(f, m, w.b)});
  }
  Estimate out;
  for (const auto& p : pieces) {
    out.value += p.e.value;
    out.error += p.e.error;
  }
  return out;
}

// log(sin t / t), smooth on [0, π/2].
double log_sinc(double t) {
  if (t < 1e-4) {
    const double t2 = t * t;
    return -t2 / 6.0 - t2 * t2 / 180.0;
  }
  return std::log(std::sin(t) / t);
}

// Λ on [0, π/2].
Estimate lobachevsky_reduced(double r) {
  if (r == 0.0) return {0.0, 0.0};
  const Estimate smooth = integrate(log_sinc, 0.0, r, 1e-16);
  const double value = r - r * std::log(2.0 * r) - smooth.value;
  constexpr double kRounding = 1e-15;
  return {value, smooth.error + kRounding};
}

}  // namespace

Estimate lobachevsky_estimate(double x) {
  if (!std::isfinite(x)) throw DomainError("Lobachevsky function needs a finite argument");
  double r = std::remainder(x, kPi);  // in [-π/2, π/2]
  double s = 1.0;
  if (r < 0) {
    r = -r;
    s = -1.0;
  }
  if (r > kPi / 2) r = kPi / 2;
  const Estimate e = lobachevsky_reduced(r);
  return {s * e.value, e.error};
}

double lobachevsky(double x) { return lobachevsky_estimate(x).value; }

double theta(long n) {
  if (n < 5) throw DomainError("theta(n) requires n >= 5 (got n=" + std::to_string(n) + ")");
  return kPi / 2 - std::acos(1.0 / (2.0 * std::cos(kPi / static_cast<double>(n))));
}

Estimate v3_estimate() {
  const Estimate l = lobachevsky_estimate(kPi / 6);
  return {2.0 * l.value, 2.0 * l.error};
}

double v3() { return v3_estimate().value; }

VolumeResult lobell_volume(long n) {
  const double th = theta(n);
  const double step = kPi / static_cast<double>(n);
  const Estimate a = lobachevsky_estimate(th);
  const Estimate b = lobachevsky_estimate(th + step);
  const Estimate c = lobachevsky_estimate(th - step);
  const Estimate d = lobachevsky_estimate(2.0 * th - kPi / 2);
  const double scale = 4.0 * static_cast<double>(n);
  VolumeResult r;
  r.value = scale * (2.0 * a.value + b.value + c.value - d.value);
  r.error_bound = scale * (2.0 * a.error + b.error + c.error + d.error);
  r.parameters["theta"] = th;
  return r;
}

FibonacciParameters fibonacci_parameters(long n) {
  if (n < 4) throw DomainError("M(n) requires n >= 4 (got n=" + std::to_string(n) + ")");
  const double b = kPi / static_cast<double>(n);
  return {0.5 * std::acos(std::cos(2.0 * b) - 0.5), b};
}

VolumeResult fibonacci_volume(long n) {
  const auto [a, b] = fibonacci_parameters(n);
  const Estimate plus = lobachevsky_estimate(a + b);
  const Estimate minus = lobachevsky_estimate(a - b);
  const double scale = 2.0 * static_cast<double>(n);
  VolumeResult r;
  r.value = scale * (plus.value + minus.value);
  r.error_bound = scale * (plus.error + minus.error);
  r.parameters["a_n"] = a;
  r.parameters["b_n"] = b;
  return r;
}

}  // namespace hyp
