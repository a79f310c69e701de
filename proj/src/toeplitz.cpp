#include "bergtop/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bergtop/errors.hpp"
#include "bergtop/moments.hpp"

namespace bergtop::toeplitz {
namespace {

std::string index_string(MultiIndex idx) {
  return "(" + std::to_string(idx.a1) + ", " + std::to_string(idx.a2) + ")";
}

}  // namespace

UndefinedWeightError::UndefinedWeightError(std::vector<MultiIndex> offending_indices)
    : std::runtime_error("operator weight undefined at " +
                         (offending_indices.empty() ? std::string("?")
                                                    : index_string(offending_indices.front())) +
                         (offending_indices.size() > 1
                              ? " and " + std::to_string(offending_indices.size() - 1) + " more"
                              : "")),
      offending(std::move(offending_indices)) {}

double CoefficientVector::norm() const {
  double acc = 0.0;
  for (const auto& [idx, c] : entries_) acc += std::norm(c);
  return std::sqrt(acc);
}

std::vector<MultiIndex> diagonal_major_window(const DomainSpec& spec, int n) {
  std::vector<MultiIndex> out;
  if (n < 0) return out;
  for (int d = 0; d <= spec.max_offset(); ++d) {
    for (int a1 = 0; a1 + d <= n && a1 <= n; ++a1) out.push_back(MultiIndex{a1, a1 + d});
  }
  return out;
}

ShiftOperator::ShiftOperator(const DomainSpec& spec, Symbol sym) : spec_(spec), sym_(sym) {
  if (sym.a < 0 || sym.c < 0) {
    throw std::invalid_argument(
        "ShiftOperator: holomorphic exponents a, c must be nonnegative, got a = " +
        std::to_string(sym.a) + ", c = " + std::to_string(sym.c));
  }
}

std::optional<MultiIndex> ShiftOperator::target(MultiIndex alpha) const {
  if (!lattice::member(spec_, alpha)) {
    throw std::invalid_argument("ShiftOperator: index " + index_string(alpha) +
                                " is not admissible for m = " + std::to_string(spec_.m()));
  }
  const auto [d1, d2] = sym_.shift();
  const MultiIndex g{alpha.a1 + d1, alpha.a2 + d2};
  if (!lattice::member(spec_, g)) return std::nullopt;
  return g;
}

ShiftOperator::Resolved ShiftOperator::resolve(MultiIndex alpha) const {
  const auto g = target(alpha);
  if (!g) return {WeightResult{WeightStatus::no_target, 0.0}, MultiIndex{}};
  // The cross moment pairs z^(alpha + full holomorphic degree) against
  // z^target; its radial exponents depend only on a and c.
  const moments::MomentIndex cross{2 * (alpha.a1 + sym_.a), 2 * (alpha.a2 + sym_.c)};
  const moments::MomentValue& num = moments::moment(cross, spec_);
  if (!num.finite) return {WeightResult{WeightStatus::undefined, 0.0}, *g};
  const moments::MomentValue& lo =
      moments::moment(moments::MomentIndex{2 * alpha.a1, 2 * alpha.a2}, spec_);
  const moments::MomentValue& hi =
      moments::moment(moments::MomentIndex{2 * g->a1, 2 * g->a2}, spec_);
  const double w = num.total / std::sqrt(lo.total * hi.total);
  return {WeightResult{WeightStatus::valid, w}, *g};
}

WeightResult ShiftOperator::weight(MultiIndex alpha) const { return resolve(alpha).weight; }

CoefficientVector ShiftOperator::apply(const CoefficientVector& v) const {
  CoefficientVector out;
  std::vector<MultiIndex> bad;
  for (const auto& [alpha, coef] : v) {
    const Resolved r = resolve(alpha);
    switch (r.weight.status) {
      case WeightStatus::no_target:
        break;
      case WeightStatus::undefined:
        bad.push_back(alpha);
        break;
      case WeightStatus::valid:
        out.add(r.target, coef * r.weight.value);
        break;
    }
  }
  if (!bad.empty()) throw UndefinedWeightError(std::move(bad));
  return out;
}

CoefficientVector ShiftOperator::power_apply(int k, const CoefficientVector& v) const {
  if (k < 0) throw std::invalid_argument("power_apply: exponent must be >= 0");
  CoefficientVector out = v;
  for (int i = 0; i < k && !out.empty(); ++i) out = apply(out);
  return out;
}

TruncatedMatrix ShiftOperator::truncated_matrix(int n) const {
  if (n < 0) throw std::invalid_argument("truncated_matrix: window must be >= 0");
  TruncatedMatrix mat;
  mat.basis = diagonal_major_window(spec_, n);
  std::map<MultiIndex, int> position;
  for (int i = 0; i < mat.dim(); ++i) position.emplace(mat.basis[i], i);
  std::vector<MultiIndex> bad;
  for (int col = 0; col < mat.dim(); ++col) {
    const Resolved r = resolve(mat.basis[col]);
    if (r.weight.status == WeightStatus::undefined) {
      bad.push_back(mat.basis[col]);
      continue;
    }
    if (r.weight.status != WeightStatus::valid) continue;
    const auto it = position.find(r.target);
    if (it == position.end()) continue;  // image falls outside the window
    mat.entries.push_back(MatrixEntry{it->second, col, r.weight.value});
  }
  if (!bad.empty()) throw UndefinedWeightError(std::move(bad));
  std::sort(mat.entries.begin(), mat.entries.end(), [](const MatrixEntry& l, const MatrixEntry& r) {
    return std::pair{l.row, l.col} < std::pair{r.row, r.col};
  });
  return mat;
}

double ShiftOperator::norm_estimate(int n) const {
  if (n < 1) throw std::invalid_argument("norm_estimate: window must be >= 1");
  const TruncatedMatrix mat = truncated_matrix(n);
  double best = 0.0;
  for (const MatrixEntry& e : mat.entries) best = std::max(best, std::fabs(e.value));
  return best;
}

TruncatedMatrix multiply(const TruncatedMatrix& lhs, const TruncatedMatrix& rhs) {
  if (lhs.basis != rhs.basis) {
    throw std::invalid_argument("multiply: matrix sections use different windows");
  }
  // Group lhs entries by column so each rhs entry scans one short run.
  std::vector<std::vector<MatrixEntry>> by_col(lhs.basis.size());
  for (const MatrixEntry& e : lhs.entries) by_col[e.col].push_back(e);
  std::map<std::pair<int, int>, double> acc;
  for (const MatrixEntry& r : rhs.entries) {
    for (const MatrixEntry& l : by_col[r.row]) {
      acc[{l.row, r.col}] += l.value * r.value;
    }
  }
  TruncatedMatrix out;
  out.basis = lhs.basis;
  for (const auto& [rc, value] : acc) {
    if (value != 0.0) out.entries.push_back(MatrixEntry{rc.first, rc.second, value});
  }
  return out;
}

TruncatedMatrix matrix_power(const TruncatedMatrix& mat, int k) {
  if (k < 1) throw std::invalid_argument("matrix_power: exponent must be >= 1");
  TruncatedMatrix out = mat;
  for (int i = 1; i < k; ++i) out = multiply(out, mat);
  return out;
}

ComposedOperator compose(const ShiftOperator& first, const ShiftOperator& second) {
  if (first.domain().m() != second.domain().m()) {
    throw std::invalid_argument("compose: operators live on different domains");
  }
  const int d_max = first.domain().max_offset();
  const auto [v1, v2] = second.symbol().shift();
  const auto [u1, u2] = first.symbol().shift();
  // Both symbols of interest advance only along/across diagonals; an offset d
  // survives the composite iff it stays within [0, d_max] after each hop.
  bool any_survives = false;
  for (int d = 0; d <= d_max; ++d) {
    const int after_second = d + (v2 - v1);
    if (after_second < 0 || after_second > d_max) continue;
    const int after_first = after_second + (u2 - u1);
    if (after_first >= 0 && after_first <= d_max) {
      any_survives = true;
      break;
    }
  }
  return ComposedOperator{first, second, !any_survives};
}

CoefficientVector ComposedOperator::apply(const CoefficientVector& v) const {
  return first.apply(second.apply(v));
}

std::complex<double> kernel_partial_sum(const DomainSpec& spec, Point z, Point w, int n) {
  if (n < 0) throw std::invalid_argument("kernel_partial_sum: window must be >= 0");
  for (const Point& p : {z, w}) {
    if (std::abs(p[0]) > std::numbers::e || std::abs(p[1]) > 2.0) {
      throw PointOutsideSupportedRegion(
          "kernel_partial_sum: points must satisfy |z1| <= e and |z2| <= 2");
    }
  }
  std::complex<double> acc{0.0, 0.0};
  for (const MultiIndex g : lattice::window(spec, n)) {
    const std::complex<double> zg = std::pow(z[0], g.a1) * std::pow(z[1], g.a2);
    const std::complex<double> wg = std::pow(w[0], g.a1) * std::pow(w[1], g.a2);
    const moments::MomentValue& norm_sq =
        moments::moment(moments::MomentIndex{2 * g.a1, 2 * g.a2}, spec);
    acc += zg * std::conj(wg) / norm_sq.total;
  }
  return acc;
}

}  // namespace bergtop::toeplitz
