#include "bergtop/lattice.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace bergtop {

DomainSpec::DomainSpec(int m) : m_(m) {
  if (m < 2) {
    throw std::invalid_argument("DomainSpec: parameter m must be >= 2, got " + std::to_string(m));
  }
  r_ = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
}

namespace lattice {

bool member(const DomainSpec& spec, MultiIndex idx) {
  if (idx.a1 < 0 || idx.a2 < 0) return false;
  // a2 >= a1 keeps the X-integral finite; 2*a1 + m - 1 > 2*a2 keeps the
  // Y-integral finite.  Both are decided in exact integer arithmetic.
  return idx.a2 >= idx.a1 && 2 * idx.a1 + spec.m() - 1 > 2 * idx.a2;
}

int diagonal_count(const DomainSpec& spec) { return spec.diagonal_count(); }

bool shift_stays(const DomainSpec& spec, MultiIndex idx, int s) {
  if (!member(spec, idx)) {
    throw std::invalid_argument("shift_stays: index (" + std::to_string(idx.a1) + ", " +
                                std::to_string(idx.a2) + ") is not admissible for m = " +
                                std::to_string(spec.m()));
  }
  return member(spec, MultiIndex{idx.a1 + s, idx.a2});
}

std::vector<MultiIndex> window(const DomainSpec& spec, int n) {
  std::vector<MultiIndex> out;
  if (n < 0) return out;
  const int d_max = spec.max_offset();
  for (int a1 = 0; a1 <= n; ++a1) {
    // Admissible a2 for this a1 form the contiguous run [a1, a1 + d_max].
    const int hi = std::min(n, a1 + d_max);
    for (int a2 = a1; a2 <= hi; ++a2) out.push_back(MultiIndex{a1, a2});
  }
  return out;
}

int nilpotency_degree(const DomainSpec& spec, int step) {
  if (step < 1) {
    throw std::invalid_argument("nilpotency_degree: step must be >= 1, got " + std::to_string(step));
  }
  const int r = spec.diagonal_count();
  const int k = (r + step - 1) / step;  // ceil(r / step)

  // Cross-check against the lattice itself.  Survival under the advance is
  // translation invariant along diagonals, so (0, d) represents the whole
  // diagonal of offset d: after k advances every representative must have
  // left, while (0, D) must still be inside after k - 1 advances.
  for (int d = 0; d <= spec.max_offset(); ++d) {
    assert(!member(spec, MultiIndex{k * step, d}));
  }
  assert(member(spec, MultiIndex{(k - 1) * step, spec.max_offset()}));
  (void)r;
  return k;
}

}  // namespace lattice
}  // namespace bergtop
