#include "bergtop/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bergtop/quadrature.hpp"

namespace bergtop {
namespace {

constexpr int kMaxIterations = 600;
constexpr double kEps = 1.0e-15;
constexpr double kTiny = 1.0e-300;
constexpr double kEulerGamma = 0.57721566490153286060651209;

// Continued fraction E_n(x) = e^{-x} / (x + n/(1 + 1/(x + (n+1)/(1 + 2/(x + ...))))),
// evaluated bottom-up with the modified Lentz scheme.  Reliable for x >= 1.
double en_continued_fraction(int n, double x) {
  double b = x + n;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double a = -static_cast<double>(i) * (n - 1 + i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::fabs(delta - 1.0) <= kEps) return h * std::exp(-x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Power series with the logarithmic term supplied at i = n - 1:
//   E_n(x) = (-x)^{n-1}/(n-1)! (psi(n) - ln x) - sum_{i != n-1} (-x)^i / (i! (i-n+1)).
// Reliable for 0 < x < 1.
double en_series(int n, double x) {
  const int nm1 = n - 1;
  double ans = 1.0 / nm1;
  double fact = 1.0;
  for (int i = 1; i <= kMaxIterations; ++i) {
    fact *= -x / i;
    double delta;
    if (i != nm1) {
      delta = -fact / (i - nm1);
    } else {
      double psi = -kEulerGamma;
      for (int k = 1; k <= nm1; ++k) psi += 1.0 / k;
      delta = fact * (psi - std::log(x));
    }
    ans += delta;
    if (std::fabs(delta) < std::fabs(ans) * kEps) return ans;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Direct integration of the definition, used only if an iteration above
// fails to converge.  The truncated tail beyond T is bounded by
// min(e^{-xT} T^{-n} / x, T^{1-n} / (n-1)).
double en_quadrature(int n, double x) {
  const auto integrand = [n, x](double u) { return std::exp(-x * u) * std::pow(u, -n); };
  double total = 0.0;
  double lo = 1.0;
  double hi = 2.0;
  for (int pass = 0; pass < 64; ++pass) {
    total += quadrature::integrate(integrand, lo, hi, 1.0e-13, 1.0e-300, 4000).value;
    const double tail = std::min(x > 0 ? std::exp(-x * hi) * std::pow(hi, -n) / x
                                       : std::numeric_limits<double>::infinity(),
                                 std::pow(hi, 1 - n) / (n - 1));
    if (tail <= 1.0e-16 * total) return total;
    lo = hi;
    hi *= 2.0;
  }
  throw std::runtime_error("expint_en: fallback integration did not converge");
}

}  // namespace

double expint_en(int n, double x) {
  if (n < 2) {
    throw std::invalid_argument("expint_en: order n must be >= 2, got " + std::to_string(n));
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("expint_en: argument x must be finite and >= 0");
  }
  if (x == 0.0) return 1.0 / (n - 1);
  const double value = (x >= 1.0) ? en_continued_fraction(n, x) : en_series(n, x);
  if (std::isnan(value)) return en_quadrature(n, x);
  return value;
}

}  // namespace bergtop
