#pragma once

#include <compare>
#include <vector>

namespace bergtop {

// A point of the exponent lattice N^2 (monomial z1^a1 z2^a2).
struct MultiIndex {
  int a1 = 0;
  int a2 = 0;
  friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// One member of the domain family, identified by the integer parameter m >= 2.
//
// The domain is the union of three rotation-invariant pieces of C^2:
//   X   : |z1| > e,  |z2| < 1 / (|z1| log |z1|)
//   Y   : |z2| > 2,  | |z1| - 1/|z2| | < |z2|^(-m)
//   Z   : |z1| <= e, |z2| <= 2        (a closed bidisc)
// Monomials z1^a1 z2^a2 are square integrable exactly for (a1, a2) in the
// admissible set R described by lattice::member below.  R occupies finitely
// many diagonals {a2 - a1 = d}; their number r and the largest admissible
// offset D = r - 1 drive everything downstream.
class DomainSpec {
 public:
  // Throws std::invalid_argument for m < 2.
  explicit DomainSpec(int m);

  int m() const { return m_; }

  // Number r of occupied diagonals: m/2 for even m, (m-1)/2 for odd m.
  int diagonal_count() const { return r_; }

  // Largest admissible offset a2 - a1, equal to diagonal_count() - 1.
  int max_offset() const { return r_ - 1; }

 private:
  int m_;
  int r_;
};

namespace lattice {

// Admissibility of the exponent pair: a2 >= a1 and 2*a1 + m - 1 > 2*a2.
// Exact integer arithmetic; negative components are never admissible.
bool member(const DomainSpec& spec, MultiIndex idx);

// Number of occupied diagonals (same value as spec.diagonal_count()).
int diagonal_count(const DomainSpec& spec);

// Whether (a1 + s, a2) is still admissible, for admissible idx.
// Throws std::invalid_argument if idx is not admissible.
bool shift_stays(const DomainSpec& spec, MultiIndex idx, int s);

// All admissible indices with a1 <= n and a2 <= n, in lexicographic order
// (a1 major, a2 minor).  n < 0 yields an empty window.
std::vector<MultiIndex> window(const DomainSpec& spec, int n);

// Smallest k such that k applications of the first-slot advance
// (a1, a2) -> (a1 + step, a2) map every admissible index outside the
// admissible set; equals ceil(r / step).  Requires step >= 1.
int nilpotency_degree(const DomainSpec& spec, int step);

}  // namespace lattice
}  // namespace bergtop
