#include "bergtop/quadrature.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "bergtop/errors.hpp"

namespace bergtop::quadrature {
namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half; even indices are the
// Kronrod extension, odd indices the embedded 7-point Gauss nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double integral;
  double error;
  long seq;  // creation order, used as a deterministic tie breaker
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, long seq) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.integral = kronrod * half;
  p.error = std::fabs((kronrod - gauss) * half);
  p.seq = seq;
  return p;
}

struct WorstFirst {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.seq > rhs.seq;  // older panel wins ties
  }
};

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, long max_subdivisions) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw std::invalid_argument("integrate: endpoints must be finite");
  }
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || (rel_tol == 0.0 && abs_tol == 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be nonnegative and not both zero");
  }
  Result res;
  if (a == b) return res;

  long seq = 0;
  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
  Panel first = evaluate_panel(f, a, b, seq++);
  res.evaluations = 15;
  double total = first.integral;
  double total_err = first.error;
  queue.push(first);

  long subdivisions = 0;
  while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
    if (subdivisions >= max_subdivisions) {
      throw BudgetExceeded("integrate: error " + std::to_string(total_err) +
                           " above tolerance after " + std::to_string(subdivisions) +
                           " subdivisions");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      // The panel cannot be split further in double precision.
      throw BudgetExceeded("integrate: panel width at machine precision with error " +
                           std::to_string(total_err));
    }
    const Panel left = evaluate_panel(f, worst.a, mid, seq++);
    const Panel right = evaluate_panel(f, mid, worst.b, seq++);
    res.evaluations += 30;
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  res.value = total;
  res.abs_error = total_err;
  return res;
}

}  // namespace bergtop::quadrature
