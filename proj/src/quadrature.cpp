#include "cpcool/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "cpcool/error.hpp"

namespace cpcool {

namespace {

// Kronrod abscissae (positive half, descending) and weights for the 15-point
// rule; every odd-indexed node is a 7-point Gauss node.
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
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double value = resk * half;
  const double err = std::abs((resk - resg) * half);
  return Segment{a, b, value, err};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) return out;

  std::priority_queue<Segment> heap;
  Segment first = kronrod15(f, a, b);
  out.evaluations = 15;
  double total = first.value;
  double total_err = first.error;
  heap.push(first);

  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  while (total_err > tolerance()) {
    if (out.subdivisions >= opts.max_subdivisions) {
      const double achieved = total != 0.0 ? total_err / std::abs(total) : total_err;
      throw NumericalError("adaptive quadrature did not converge", achieved);
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval no longer representable; accept what we have.
      const double achieved = total != 0.0 ? total_err / std::abs(total) : total_err;
      throw NumericalError("quadrature interval underflow", achieved);
    }
    Segment left = kronrod15(f, worst.a, mid);
    Segment right = kronrod15(f, mid, worst.b);
    out.evaluations += 30;
    ++out.subdivisions;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  double sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error_estimate = err;
  return out;
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a, double scale,
                                         const QuadratureOptions& opts) {
  if (!(scale > 0.0)) {
    throw DomainError("integrate_semi_infinite requires a positive scale");
  }
  auto mapped = [&](double u) {
    const double one_minus = 1.0 - u;
    if (one_minus <= 0.0) return 0.0;  // x = inf; f is assumed to decay there
    const double x = a - scale * std::log(one_minus);
    return f(x) * scale / one_minus;
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace cpcool
