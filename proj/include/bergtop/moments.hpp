#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>

#include "bergtop/lattice.hpp"

namespace bergtop::moments {

using Rational = boost::multiprecision::cpp_rational;

// Exponent pair (s, t) of the radial monomial |z1|^s |z2|^t being integrated
// against the measure r1 r2 dr1 dr2 (after factoring out the 4 pi^2 of the
// two angular integrals).  For the squared norm of z^alpha, s = 2*a1 and
// t = 2*a2.
struct MomentIndex {
  int s = 0;
  int t = 0;
  friend constexpr auto operator<=>(const MomentIndex&, const MomentIndex&) = default;
};

struct RegionMoment {
  bool finite = false;
  double value = 0.0;      // set only when finite
  double abs_error = 0.0;  // bound on the rounding/evaluation error of value
};

// Exact closed forms of the normalized region moments (in units of 1/(4 pi^2),
// i.e. of the radial integrals themselves).
//
//   Z:  q * e^(e_power) * 2^(two_power)  with rational q = 1/((s+2)(t+2))
//   Y:  a plain rational (dyadic denominator times integer factors), when finite
//   X:  rational exactly when s == t, namely 1/((t+1)(t+2)); for s < t the
//       value is E_{t+2}(t-s)/(t+2), which is not rational.
struct ExactForms {
  Rational z_rational;
  int z_e_power = 0;
  int z_two_power = 0;
  bool y_finite = false;
  Rational y_rational;
  bool x_rational_known = false;
  Rational x_rational;
};

// Full moment M(s, t) = 4 pi^2 (mu_X + mu_Y + mu_Z): the integral of
// |z1|^s |z2|^t over the domain.  Parts are unnormalized (they include the
// 4 pi^2 factor); each is populated only when its region integral converges.
struct MomentValue {
  bool finite = false;  // X and Y parts both converge (Z always does)
  double total = 0.0;   // set only when finite
  bool x_finite = false;
  bool y_finite = false;
  double x_part = 0.0;
  double y_part = 0.0;
  double z_part = 0.0;
  double abs_error_bound = 0.0;  // on total, when finite
  ExactForms exact;
};

// Normalized Z-region integral e^{s+2} 2^{t+2} / ((s+2)(t+2)).
// Always finite.  Throws std::invalid_argument for negative s or t.
double mu_z(MomentIndex idx);

// Normalized X-region integral; finite iff s <= t, and then equal to
// E_{t+2}(t-s) / (t+2).
RegionMoment mu_x(MomentIndex idx);

// Normalized Y-region integral; finite iff t < s + m - 1, and then an exact
// rational evaluated in arbitrary-precision arithmetic:
//   (2/(s+2)) * sum over odd j in [1, s+2] of
//       C(s+2, j) * 2^(t-s+j(1-m)) / (s - t + j(m-1)).
RegionMoment mu_y(MomentIndex idx, const DomainSpec& spec);

// The exact rational behind mu_y, or nullopt when divergent.
std::optional<Rational> mu_y_exact(MomentIndex idx, const DomainSpec& spec);

// Full moment, memoized per (m, s, t).  The returned reference stays valid
// for the lifetime of the program; concurrent callers are safe, the first
// completed computation wins.  Throws std::invalid_argument for negative
// s or t.  Finiteness is equivalent to lattice membership of (s/2, t/2)
// when s and t are even.
const MomentValue& moment(MomentIndex idx, const DomainSpec& spec);

enum class Region { X, Y, Z };

struct OracleResult {
  bool finite = false;
  double value = 0.0;      // normalized region integral, set when finite
  double abs_error = 0.0;  // certified bound: quadrature estimate + tail bound
  long evaluations = 0;
};

// Independent numerical evaluation of one normalized region integral,
// bypassing every closed form above: adaptive Gauss-Kronrod panels on the
// radial integrand with explicit tail truncation bounds (doubling the
// truncation point until the analytic tail bound is small enough).
// Divergent combinations are reported, not integrated.
//
// rel_tol must lie in [1e-14, 1e-2]; budget caps the total number of panel
// subdivisions across all pieces (BudgetExceeded beyond it).
OracleResult quadrature_oracle(MomentIndex idx, const DomainSpec& spec, Region region,
                               double rel_tol, long budget = 1000000);

// A certified constant C with:  for every admissible alpha whose advance
// (a1+2, a2) is admissible, the weight of the two-step first-slot shift at
// alpha satisfies  weight^2 <= M(2a1+2, 2a2)^2 / (M(2a1,2a2) M(2a1+4,2a2))
// <= C.  The bound has the shape (C_X + C_Y)/pi^2 + e^2 where C_X dominates
// every X-part at the numerator index and C_Y dominates every Y-part
// normalized by the Z-part of the advanced index; both are obtained from a
// certified window scan plus analytic tail dominators, so C covers all of
// the (infinitely many) admissible indices, not just the scanned window.
// Requires m >= 6 and window >= 2 * diagonal_count.
double bound_constant(const DomainSpec& spec, int window);

}  // namespace bergtop::moments
