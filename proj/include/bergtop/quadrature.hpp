#pragma once

#include <functional>

namespace bergtop::quadrature {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;  // accumulated error estimate
  long evaluations = 0;    // integrand evaluations performed
};

// Globally adaptive Gauss-Kronrod (G7, K15) integration of f over the finite
// interval [a, b].  The worst panel (largest error estimate, ties broken by
// creation order, so results are deterministic) is bisected until
//   sum of panel errors <= max(abs_tol, rel_tol * |integral|)
// or the subdivision budget is exhausted, in which case BudgetExceeded is
// thrown.  The error estimate is the conservative |K15 - G7| per panel.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, long max_subdivisions);

}  // namespace bergtop::quadrature
