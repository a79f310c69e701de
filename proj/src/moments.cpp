#include "bergtop/moments.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bergtop/errors.hpp"
#include "bergtop/expint.hpp"
#include "bergtop/quadrature.hpp"

namespace bergtop::moments {
namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

void require_nonnegative(MomentIndex idx, const char* who) {
  if (idx.s < 0 || idx.t < 0) {
    throw std::invalid_argument(std::string(who) + ": exponents must be nonnegative, got (" +
                                std::to_string(idx.s) + ", " + std::to_string(idx.t) + ")");
  }
}

double to_double(const Rational& q) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big num(boost::multiprecision::numerator(q));
  const Big den(boost::multiprecision::denominator(q));
  return static_cast<double>(num / den);
}

bool x_converges(MomentIndex idx) { return idx.s <= idx.t; }

bool y_converges(MomentIndex idx, const DomainSpec& spec) {
  return idx.t < idx.s + spec.m() - 1;
}

}  // namespace

double mu_z(MomentIndex idx) {
  require_nonnegative(idx, "mu_z");
  // int_0^e r^{s+1} dr * int_0^2 r^{t+1} dr
  return std::exp(idx.s + 2.0) * std::ldexp(1.0, idx.t + 2) /
         (static_cast<double>(idx.s + 2) * (idx.t + 2));
}

RegionMoment mu_x(MomentIndex idx) {
  require_nonnegative(idx, "mu_x");
  if (!x_converges(idx)) return RegionMoment{};
  // Substituting u = log r1 turns the X integral into the generalized
  // exponential integral: E_{t+2}(t-s) / (t+2).
  const double value = expint_en(idx.t + 2, static_cast<double>(idx.t - idx.s)) / (idx.t + 2);
  return RegionMoment{true, value, std::fabs(value) * 1.0e-13};
}

std::optional<Rational> mu_y_exact(MomentIndex idx, const DomainSpec& spec) {
  require_nonnegative(idx, "mu_y");
  if (!y_converges(idx, spec)) return std::nullopt;
  using boost::multiprecision::cpp_int;
  const int s = idx.s;
  const int t = idx.t;
  const int m = spec.m();
  const int n = s + 2;
  // Expanding (1/r + r^{-m})^{s+2} - (1/r - r^{-m})^{s+2} leaves twice the
  // odd-j binomial terms; each integrates over (2, inf) to a rational.
  Rational total = 0;
  cpp_int binom = n;  // C(n, 1)
  for (int j = 1; j <= n; j += 2) {
    const int two_power = t - s + j * (1 - m);  // always negative when convergent
    assert(two_power < 0);
    const cpp_int denom_linear = s - t + j * (m - 1);
    assert(denom_linear > 0);
    total += Rational(binom, denom_linear << static_cast<unsigned>(-two_power));
    if (j + 2 <= n) {
      binom = binom * (n - j) * (n - j - 1) / ((j + 1) * (j + 2));
    }
  }
  total *= Rational(2, n);
  return total;
}

RegionMoment mu_y(MomentIndex idx, const DomainSpec& spec) {
  const auto exact = mu_y_exact(idx, spec);
  if (!exact) return RegionMoment{};
  const double value = to_double(*exact);
  return RegionMoment{true, value, std::fabs(value) * 1.0e-15};
}

const MomentValue& moment(MomentIndex idx, const DomainSpec& spec) {
  require_nonnegative(idx, "moment");
  using Key = std::tuple<int, int, int>;
  static std::map<Key, MomentValue>* cache = new std::map<Key, MomentValue>();
  static std::shared_mutex mutex;
  const Key key{spec.m(), idx.s, idx.t};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache->find(key); it != cache->end()) return it->second;
  }

  MomentValue v;
  const RegionMoment x = mu_x(idx);
  const RegionMoment y = mu_y(idx, spec);
  const double z = mu_z(idx);
  v.x_finite = x.finite;
  v.y_finite = y.finite;
  v.z_part = kFourPiSq * z;
  if (x.finite) v.x_part = kFourPiSq * x.value;
  if (y.finite) v.y_part = kFourPiSq * y.value;
  v.finite = x.finite && y.finite;
  if (v.finite) {
    v.total = v.x_part + v.y_part + v.z_part;
    v.abs_error_bound =
        kFourPiSq * (x.abs_error + y.abs_error + std::fabs(z) * 1.0e-15) +
        std::fabs(v.total) * 4.0e-16;
  }
  v.exact.z_rational = Rational(1, static_cast<long>(idx.s + 2) * (idx.t + 2));
  v.exact.z_e_power = idx.s + 2;
  v.exact.z_two_power = idx.t + 2;
  if (auto yq = mu_y_exact(idx, spec)) {
    v.exact.y_finite = true;
    v.exact.y_rational = *yq;
  }
  if (idx.s == idx.t) {
    // E_{t+2}(0) = 1/(t+1) makes the X part rational on the main diagonal.
    v.exact.x_rational_known = true;
    v.exact.x_rational = Rational(1, static_cast<long>(idx.t + 1) * (idx.t + 2));
  }

  std::unique_lock lock(mutex);
  auto [it, inserted] = cache->emplace(key, std::move(v));
  (void)inserted;  // a concurrent first writer is fine; entries are identical
  return it->second;
}

namespace {

// Integrates f over [a, inf), splitting at doubling truncation points until
// the analytic tail bound drops below a quarter of the relative target.
// f must be nonnegative and tail_bound(T) must dominate int_T^inf f.
OracleResult integrate_with_tail(const std::function<double(double)>& f, double a,
                                 double first_cut,
                                 const std::function<double(double)>& tail_bound,
                                 double rel_tol, long budget) {
  OracleResult out;
  out.finite = true;
  double lo = a;
  double hi = first_cut;
  long remaining = budget;
  for (int pass = 0; pass < 1200; ++pass) {
    if (remaining <= 0) {
      throw BudgetExceeded("quadrature_oracle: subdivision budget exhausted");
    }
    const quadrature::Result piece =
        quadrature::integrate(f, lo, hi, 0.5 * rel_tol, 1.0e-300, remaining);
    remaining -= (piece.evaluations - 15) / 30;
    out.value += piece.value;
    out.abs_error += piece.abs_error;
    out.evaluations += piece.evaluations;
    const double tb = tail_bound(hi);
    if (tb <= 0.25 * rel_tol * out.value) {
      out.abs_error += tb;
      return out;
    }
    lo = hi;
    hi *= 2.0;
    if (hi > 1.0e280) {
      throw BudgetExceeded("quadrature_oracle: truncation point diverged");
    }
  }
  throw BudgetExceeded("quadrature_oracle: too many truncation extensions");
}

OracleResult oracle_z(MomentIndex idx, double rel_tol, long budget) {
  const int s = idx.s;
  const int t = idx.t;
  const auto f1 = [s](double r) { return std::pow(r, s + 1); };
  const auto f2 = [t](double r) { return std::pow(r, t + 1); };
  const quadrature::Result i1 =
      quadrature::integrate(f1, 0.0, std::numbers::e, 0.25 * rel_tol, 1.0e-300, budget);
  const quadrature::Result i2 =
      quadrature::integrate(f2, 0.0, 2.0, 0.25 * rel_tol, 1.0e-300, budget);
  OracleResult out;
  out.finite = true;
  out.value = i1.value * i2.value;
  out.abs_error = i1.abs_error * std::fabs(i2.value) + i2.abs_error * std::fabs(i1.value) +
                  i1.abs_error * i2.abs_error;
  out.evaluations = i1.evaluations + i2.evaluations;
  return out;
}

OracleResult oracle_x(MomentIndex idx, double rel_tol, long budget) {
  const int s = idx.s;
  const int t = idx.t;
  if (s > t) return OracleResult{};
  const auto f = [s, t](double r) {
    return std::pow(r, s - t - 1) * std::pow(std::log(r), -(t + 2.0)) / (t + 2);
  };
  if (s == t) {
    // The integrand r^{-1} (log r)^{-(t+2)} has the elementary antiderivative
    // -(log r)^{-(t+1)} / (t+1); integrate the head numerically and add the
    // exact remainder beyond T, which contributes no truncation error.
    const double T = std::exp(8.0);
    const quadrature::Result head =
        quadrature::integrate(f, std::numbers::e, T, 0.5 * rel_tol, 1.0e-300, budget);
    OracleResult out;
    out.finite = true;
    out.value = head.value + std::pow(8.0, -(t + 1.0)) / ((t + 1.0) * (t + 2.0));
    out.abs_error = head.abs_error;
    out.evaluations = head.evaluations;
    return out;
  }
  // s < t: the integrand decays like r^{s-t-1}; beyond T the tail is at most
  // (log T)^{-(t+2)} T^{s-t} / ((t-s)(t+2)).
  const auto tail = [s, t](double T) {
    return std::pow(std::log(T), -(t + 2.0)) * std::pow(T, static_cast<double>(s - t)) /
           (static_cast<double>(t - s) * (t + 2));
  };
  return integrate_with_tail(f, std::numbers::e, 2.0 * std::numbers::e, tail, rel_tol, budget);
}

OracleResult oracle_y(MomentIndex idx, const DomainSpec& spec, double rel_tol, long budget) {
  const int s = idx.s;
  const int t = idx.t;
  const int m = spec.m();
  if (t >= s + m - 1) return OracleResult{};
  // Width of the slab around |z1| = 1/r relative to the center is
  // v = r^{1-m}; the bracket (1/r + r^{-m})^{s+2} - (1/r - r^{-m})^{s+2}
  // is evaluated cancellation-free via expm1/log1p.
  const auto f = [s, t, m](double r) {
    const double v = std::pow(r, 1.0 - m);
    const double bracket = std::pow(1.0 - v, s + 2.0) *
                           std::expm1((s + 2.0) * (std::log1p(v) - std::log1p(-v)));
    return std::pow(r, t - s - 1.0) * bracket / (s + 2);
  };
  const double amp = 2.0 * std::pow(1.0 + std::pow(2.0, 1.0 - m), s + 1.0);
  const auto tail = [s, t, m, amp](double T) {
    return amp * std::pow(T, static_cast<double>(t - s - m + 1)) / (s + m - t - 1);
  };
  return integrate_with_tail(f, 2.0, 4.0, tail, rel_tol, budget);
}

}  // namespace

OracleResult quadrature_oracle(MomentIndex idx, const DomainSpec& spec, Region region,
                               double rel_tol, long budget) {
  require_nonnegative(idx, "quadrature_oracle");
  if (!(rel_tol >= 1.0e-14 && rel_tol <= 1.0e-2)) {
    throw std::invalid_argument("quadrature_oracle: rel_tol must lie in [1e-14, 1e-2]");
  }
  if (budget <= 0) throw std::invalid_argument("quadrature_oracle: budget must be positive");
  switch (region) {
    case Region::Z:
      return oracle_z(idx, rel_tol, budget);
    case Region::X:
      return oracle_x(idx, rel_tol, budget);
    case Region::Y:
      return oracle_y(idx, spec, rel_tol, budget);
  }
  throw std::invalid_argument("quadrature_oracle: unknown region");
}

double bound_constant(const DomainSpec& spec, int window) {
  if (spec.m() < 6) {
    throw std::invalid_argument("bound_constant: requires m >= 6, got " +
                                std::to_string(spec.m()));
  }
  if (window < 2 * spec.diagonal_count()) {
    throw WindowTooSmall("bound_constant: window " + std::to_string(window) +
                         " is smaller than twice the diagonal count " +
                         std::to_string(spec.diagonal_count()));
  }
  const int m = spec.m();
  const double pi_sq = std::numbers::pi * std::numbers::pi;
  const double e_sq = std::exp(2.0);

  // Window scan: every admissible alpha whose two-step advance stays
  // admissible contributes its numerator-index X part to C_X and its
  // Z-normalized, e^2-weighted Y part to C_Y.
  double cx = 0.0;
  double cy = 0.0;
  for (const MultiIndex alpha : lattice::window(spec, window)) {
    if (!lattice::member(spec, MultiIndex{alpha.a1 + 2, alpha.a2})) continue;
    const MomentIndex mid{2 * alpha.a1 + 2, 2 * alpha.a2};
    const RegionMoment x = mu_x(mid);
    const RegionMoment y = mu_y(mid, spec);
    assert(x.finite && y.finite);
    const double z_advanced = mu_z(MomentIndex{2 * alpha.a1 + 4, 2 * alpha.a2});
    cx = std::max(cx, kFourPiSq * x.value);
    cy = std::max(cy, (y.value / z_advanced) * pi_sq * e_sq);
  }

  // Analytic dominators for every admissible index beyond the window.
  //
  // X: the numerator index has t - s = 2(offset - 1) >= 2 and t >= 2W + 2,
  // so 4 pi^2 E_{t+2}(t-s)/(t+2) <= 4 pi^2 e^{-2} / ((2W+3)(2W+4)).
  const double x_tail = kFourPiSq * std::exp(-2.0) / ((2.0 * window + 3.0) * (2.0 * window + 4.0));
  cx = std::max(cx, x_tail);

  // Y: with s = 2a1+2, t = 2a2 and the advanced Z part in the denominator,
  //   pi^2 e^2 Y(s,t) / Z(s+2,t)
  //     <= 2 pi^2 e^2 (1+2^{1-m})^{2a1+3} 2^{-2a1-m-3} e^{-2a1-6}
  //        (2a1+6)(2a1+m)/3 =: Q(a1),
  // which decreases in a1; outside the window a1 >= ceil((2W+4-m)/2).
  const auto q_dominator = [m, pi_sq, e_sq](int a1) {
    return 2.0 * pi_sq * e_sq * std::pow(1.0 + std::pow(2.0, 1.0 - m), 2.0 * a1 + 3.0) *
           std::exp2(-(2.0 * a1 + m + 3.0)) * std::exp(-(2.0 * a1 + 6.0)) *
           (2.0 * a1 + 6.0) * (2.0 * a1 + m) / 3.0;
  };
  const int a1_min = std::max(0, (2 * window + 4 - m + 1) / 2);
  double y_tail = 0.0;
  for (int a1 = a1_min; a1 <= a1_min + 8; ++a1) y_tail = std::max(y_tail, q_dominator(a1));
  cy = std::max(cy, y_tail);

  return (cx + cy) / pi_sq + e_sq;
}

}  // namespace bergtop::moments
