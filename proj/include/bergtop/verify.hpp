#pragma once

#include <optional>
#include <vector>

#include "bergtop/lattice.hpp"
#include "bergtop/toeplitz.hpp"

namespace bergtop::verify {

// Outcomes of the four checks run by verify_proposition.
struct Checks {
  bool nonzero = false;        // some basis vector has a positive weight
  bool infinite_rank = false;  // distinct witnesses map to distinct targets
  bool bounded = false;        // sup of observed weights <= sqrt(bound_constant)
  bool degree = false;         // power degree kills the window, degree-1 does not
  bool all() const { return nonzero && infinite_rank && bounded && degree; }
};

// Certificate that the operator with symbol z1/conj(z1) on the domain with
// parameter m is nonzero, of infinite rank, bounded, and nilpotent of the
// exact degree predicted by the lattice geometry.
struct PropositionReport {
  int m = 0;
  int window = 0;
  std::optional<MultiIndex> nonzero_witness;  // first admissible index with a live image
  double nonzero_weight = 0.0;
  std::vector<MultiIndex> rank_witnesses;  // indices whose images are pairwise distinct
  double norm_bound = 0.0;                 // sup of observed weights over the window
  double bound_constant = 0.0;             // certified dominator of every squared weight
  int degree_lattice = 0;                  // nilpotency degree from the lattice geometry
  int degree_floor_m_over_4 = 0;           // floor(m/4), for comparison
  bool degrees_agree = false;
  Checks checks;
};

// Runs the four checks on a window of size at least 4 * diagonal_count.
// Requires m >= 6 (smaller parameters have at most two occupied diagonals
// and the two-step advance is already zero or not nilpotent of degree > 1).
// Throws WindowTooSmall / std::invalid_argument accordingly.
PropositionReport verify_proposition(const DomainSpec& spec, int window);

struct DegreeScanRow {
  int m = 0;
  int r = 0;                // occupied diagonals
  int degree_lattice = 0;   // ceil(r / 2)
  int floor_m_over_4 = 0;
  bool agree = false;
};

// Lattice nilpotency degree of the two-step advance for every m in
// [m_from, m_to] (2 <= m_from <= m_to).
std::vector<DegreeScanRow> degree_scan(int m_from, int m_to);

// One row of the diagonal-exit table of a composite of two first-slot
// advances: the offset after each hop and whether it is still admissible.
struct DiagonalExit {
  int offset = 0;
  int offset_after_second = 0;  // after the factor applied first
  bool in_after_second = false;
  int offset_after_both = 0;
  bool in_after_both = false;
};

// Certificate that T_u o T_v vanishes identically although neither factor is
// the zero operator.
struct ZeroProductCertificate {
  toeplitz::Symbol u;  // applied last
  toeplitz::Symbol v;  // applied first
  MultiIndex witness_u;  // basis vector with a positive weight under T_u
  MultiIndex witness_v;
  double weight_u = 0.0;
  double weight_v = 0.0;
  std::vector<DiagonalExit> exit_table;  // one row per occupied diagonal
};

// Searches first-slot advance pairs: each factor advances a1 by some
// p in [1, min(max_degree, r-1)] (so each factor is individually nonzero)
// while the advances sum to at least r (so the composite kills every
// diagonal).  Both z1^p and the mixed z1^ceil(p/2)/conj(z1)^floor(p/2)
// representative are tried for each p.  Requires m >= 6 and max_degree >= 1.
std::vector<ZeroProductCertificate> zero_product_search(const DomainSpec& spec, int max_degree);

// Re-checks a certificate from scratch: positive factor weights at the
// witnesses, a consistent exit table, and the composite annihilating every
// basis vector of the window.
bool validate_certificate(const ZeroProductCertificate& cert, const DomainSpec& spec, int window);

}  // namespace bergtop::verify
