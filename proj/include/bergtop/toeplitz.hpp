#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bergtop/lattice.hpp"

namespace bergtop::toeplitz {

// Quasi-homogeneous monomial symbol u = z1^a conj(z1)^b' z2^c conj(z2)^d'
// stored through the signed exponents b = -b', d = -d': non-negative b, d
// put the conjugates in the denominator (|z1|, |z2| powers), negative b, d
// put them in the numerator and produce backward shifts.  a, c >= 0.
struct Symbol {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  // Advance of the exponent lattice point under the associated operator.
  std::pair<int, int> shift() const { return {a + b, c + d}; }

  // Powers of |z1|, |z2| in |u| (the radial part of the symbol).
  std::pair<int, int> radial_degree() const { return {a - b, c - d}; }

  // The distinguished symbol z1 / conj(z1): a two-step first-slot advance.
  static Symbol phi() { return Symbol{1, 1, 0, 0}; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

enum class WeightStatus {
  valid,      // target admissible, weight finite
  no_target,  // the advance leaves the admissible set: the basis vector dies
  undefined   // target admissible but the cross moment diverges
};

struct WeightResult {
  WeightStatus status = WeightStatus::no_target;
  double value = 0.0;  // set only when valid
};

// Thrown when applying an operator whose weight is undefined on some basis
// vector carrying a nonzero coefficient.
struct UndefinedWeightError : std::runtime_error {
  explicit UndefinedWeightError(std::vector<MultiIndex> offending_indices);
  std::vector<MultiIndex> offending;
};

using Coefficient = std::complex<double>;

// A finitely supported vector in the monomial orthonormal basis, stored as
// index -> coefficient with exact-zero entries pruned.
class CoefficientVector {
 public:
  CoefficientVector() = default;

  static CoefficientVector basis(MultiIndex idx) {
    CoefficientVector v;
    v.entries_[idx] = Coefficient{1.0, 0.0};
    return v;
  }

  void add(MultiIndex idx, Coefficient value) {
    if (value == Coefficient{}) return;
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (it->second == Coefficient{}) entries_.erase(it);
    }
  }

  Coefficient at(MultiIndex idx) const {
    const auto it = entries_.find(idx);
    return it == entries_.end() ? Coefficient{} : it->second;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  double norm() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<MultiIndex, Coefficient> entries_;
};

struct MatrixEntry {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Finite section of an operator in the monomial basis, with the basis
// enumerated diagonal-major: offset a2 - a1 ascending, then a1 ascending.
// Entries are sorted by (row, col); structural zeros are never stored.
struct TruncatedMatrix {
  std::vector<MultiIndex> basis;   // column/row labels, diagonal-major
  std::vector<MatrixEntry> entries;

  int dim() const { return static_cast<int>(basis.size()); }
  std::size_t nnz() const { return entries.size(); }
};

// The basis enumeration used by TruncatedMatrix.
std::vector<MultiIndex> diagonal_major_window(const DomainSpec& spec, int n);

// Sparse product lhs * rhs; the two sections must share one basis.
TruncatedMatrix multiply(const TruncatedMatrix& lhs, const TruncatedMatrix& rhs);

// k-th power of a section (k >= 1).
TruncatedMatrix matrix_power(const TruncatedMatrix& mat, int k);

// The weighted-shift operator T_u f = B(u f) on the Bergman space of the
// domain: it maps the basis vector at alpha to weight(alpha) times the basis
// vector at alpha + shift, or to zero when the shifted index leaves the
// admissible set.
class ShiftOperator {
 public:
  // Throws std::invalid_argument if sym.a < 0 or sym.c < 0.
  ShiftOperator(const DomainSpec& spec, Symbol sym);

  const DomainSpec& domain() const { return spec_; }
  const Symbol& symbol() const { return sym_; }

  // Advanced index alpha + shift, or nullopt when it leaves the admissible
  // set (including negative components).  Throws std::invalid_argument when
  // alpha itself is not admissible.
  std::optional<MultiIndex> target(MultiIndex alpha) const;

  // Matrix element <T_u e_alpha, e_target> = M(2(a1+a), 2(a2+c)) /
  // sqrt(M(2a1, 2a2) M(2g1, 2g2)); `undefined` when the numerator moment
  // diverges even though the target is admissible.
  WeightResult weight(MultiIndex alpha) const;

  // Image of a finitely supported vector.  Throws UndefinedWeightError if
  // any populated basis vector has an undefined weight.
  CoefficientVector apply(const CoefficientVector& v) const;

  // k-fold application, k >= 0.
  CoefficientVector power_apply(int k, const CoefficientVector& v) const;

  // Finite section on the diagonal-major window of size n (n >= 0).
  TruncatedMatrix truncated_matrix(int n) const;

  // Largest matrix element magnitude of the finite section (n >= 1).  The
  // section moves distinct basis vectors to distinct basis vectors, so this
  // equals the section's operator norm and gives a lower bound for the
  // operator norm itself.
  double norm_estimate(int n) const;

 private:
  struct Resolved {
    WeightResult weight;
    MultiIndex target;  // meaningful only when weight.status == valid
  };
  Resolved resolve(MultiIndex alpha) const;

  DomainSpec spec_;
  Symbol sym_;
};

// Composition first o second (apply `second`, then `first`).  is_zero is
// decided structurally from the two advances: a diagonal offset survives the
// composite only if it stays within [0, max_offset] after each hop, and for
// first-slot advances survival depends on the offset alone.
struct ComposedOperator {
  ShiftOperator first;
  ShiftOperator second;
  bool is_zero = false;

  CoefficientVector apply(const CoefficientVector& v) const;
};

ComposedOperator compose(const ShiftOperator& first, const ShiftOperator& second);

using Point = std::array<std::complex<double>, 2>;

// Partial sum over the admissible window [0, n]^2 of the Bergman kernel
// series sum_gamma z^gamma conj(w)^gamma / M(2g1, 2g2).  Points must satisfy
// |z1| <= e, |z2| <= 2 (the closed bidisc piece of the domain), where the
// admissible moments grow fast enough for the series to converge; outside it
// PointOutsideSupportedRegion is thrown.
std::complex<double> kernel_partial_sum(const DomainSpec& spec, Point z, Point w, int n);

}  // namespace bergtop::toeplitz
