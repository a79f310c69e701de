#include "bergtop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "bergtop/errors.hpp"
#include "bergtop/moments.hpp"

namespace bergtop::verify {
namespace {

void require_proposition_domain(const DomainSpec& spec, const char* who) {
  if (spec.m() < 6) {
    throw std::invalid_argument(std::string(who) + ": requires m >= 6, got " +
                                std::to_string(spec.m()));
  }
}

}  // namespace

PropositionReport verify_proposition(const DomainSpec& spec, int window) {
  require_proposition_domain(spec, "verify_proposition");
  const int r = spec.diagonal_count();
  if (window < 4 * r) {
    throw WindowTooSmall("verify_proposition: window " + std::to_string(window) +
                         " is smaller than 4 * diagonal_count = " + std::to_string(4 * r));
  }

  PropositionReport rep;
  rep.m = spec.m();
  rep.window = window;

  const toeplitz::ShiftOperator op(spec, toeplitz::Symbol::phi());
  const std::vector<MultiIndex> pts = lattice::window(spec, window);

  // Nonzero + norm: scan every weight over the window.
  bool any_undefined = false;
  for (const MultiIndex alpha : pts) {
    const toeplitz::WeightResult w = op.weight(alpha);
    if (w.status == toeplitz::WeightStatus::undefined) {
      any_undefined = true;
      continue;
    }
    if (w.status != toeplitz::WeightStatus::valid) continue;
    if (!rep.nonzero_witness && w.value > 0.0) {
      rep.nonzero_witness = alpha;
      rep.nonzero_weight = w.value;
    }
    rep.norm_bound = std::max(rep.norm_bound, w.value);
  }
  rep.checks.nonzero = rep.nonzero_witness.has_value() && !any_undefined;

  // Infinite rank: the indices (k, k+2) survive the advance for every k, and
  // their images (k+2, k+2) are pairwise distinct.
  std::set<MultiIndex> images;
  for (int k = 0; 2 * k <= window - 2; ++k) {
    const MultiIndex alpha{k, k + 2};
    const toeplitz::WeightResult w = op.weight(alpha);
    if (w.status != toeplitz::WeightStatus::valid || !(w.value > 0.0)) break;
    rep.rank_witnesses.push_back(alpha);
    images.insert(*op.target(alpha));
  }
  rep.checks.infinite_rank = rep.rank_witnesses.size() >= static_cast<std::size_t>(window / 2) &&
                             images.size() == rep.rank_witnesses.size();

  // Boundedness: the certified constant dominates every squared weight.
  rep.bound_constant = moments::bound_constant(spec, window);
  rep.checks.bounded = rep.norm_bound <= std::sqrt(rep.bound_constant);

  // Nilpotency degree: the lattice prediction, checked against the operator.
  rep.degree_lattice = lattice::nilpotency_degree(spec, 2);
  bool killed_at_degree = true;
  bool alive_before = false;
  for (const MultiIndex alpha : pts) {
    const auto basis = toeplitz::CoefficientVector::basis(alpha);
    if (!op.power_apply(rep.degree_lattice, basis).empty()) killed_at_degree = false;
    if (!op.power_apply(rep.degree_lattice - 1, basis).empty()) alive_before = true;
  }
  rep.checks.degree = killed_at_degree && alive_before;

  rep.degree_floor_m_over_4 = spec.m() / 4;
  rep.degrees_agree = rep.degree_lattice == rep.degree_floor_m_over_4;
  return rep;
}

std::vector<DegreeScanRow> degree_scan(int m_from, int m_to) {
  if (m_from < 2 || m_to < m_from) {
    throw std::invalid_argument("degree_scan: need 2 <= m_from <= m_to");
  }
  std::vector<DegreeScanRow> rows;
  for (int m = m_from; m <= m_to; ++m) {
    const DomainSpec spec(m);
    DegreeScanRow row;
    row.m = m;
    row.r = spec.diagonal_count();
    row.degree_lattice = lattice::nilpotency_degree(spec, 2);
    row.floor_m_over_4 = m / 4;
    row.agree = row.degree_lattice == row.floor_m_over_4;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::vector<DiagonalExit> exit_table_for(const DomainSpec& spec, int advance_v, int advance_u) {
  std::vector<DiagonalExit> table;
  for (int d = 0; d <= spec.max_offset(); ++d) {
    DiagonalExit row;
    row.offset = d;
    row.offset_after_second = d - advance_v;
    row.in_after_second = row.offset_after_second >= 0 && row.offset_after_second <= spec.max_offset();
    row.offset_after_both = d - advance_v - advance_u;
    row.in_after_both = row.offset_after_both >= 0 && row.offset_after_both <= spec.max_offset();
    table.push_back(row);
  }
  return table;
}

}  // namespace

std::vector<ZeroProductCertificate> zero_product_search(const DomainSpec& spec, int max_degree) {
  require_proposition_domain(spec, "zero_product_search");
  if (max_degree < 1) {
    throw std::invalid_argument("zero_product_search: max_degree must be >= 1");
  }
  const int r = spec.diagonal_count();

  // Candidate factors: for each first-slot advance p < r, the holomorphic
  // representative z1^p and the balanced one z1^ceil(p/2)/conj(z1)^floor(p/2)
  // (they advance identically; p = 2 balanced is the distinguished symbol).
  std::vector<toeplitz::Symbol> reps;
  for (int p = 1; p <= std::min(max_degree, r - 1); ++p) {
    reps.push_back(toeplitz::Symbol{p, 0, 0, 0});
    if (p >= 2) reps.push_back(toeplitz::Symbol{(p + 1) / 2, p / 2, 0, 0});
  }

  std::vector<ZeroProductCertificate> certs;
  for (const toeplitz::Symbol& u : reps) {
    for (const toeplitz::Symbol& v : reps) {
      const int pu = u.shift().first;
      const int pv = v.shift().first;
      if (pu + pv < r) continue;  // some diagonal survives the composite
      ZeroProductCertificate cert;
      cert.u = u;
      cert.v = v;
      // (0, p) survives a first-slot advance by p: the image (p, p) sits on
      // the main diagonal.
      cert.witness_u = MultiIndex{0, pu};
      cert.witness_v = MultiIndex{0, pv};
      const toeplitz::ShiftOperator op_u(spec, u);
      const toeplitz::ShiftOperator op_v(spec, v);
      const toeplitz::WeightResult wu = op_u.weight(cert.witness_u);
      const toeplitz::WeightResult wv = op_v.weight(cert.witness_v);
      if (wu.status != toeplitz::WeightStatus::valid || !(wu.value > 0.0)) continue;
      if (wv.status != toeplitz::WeightStatus::valid || !(wv.value > 0.0)) continue;
      cert.weight_u = wu.value;
      cert.weight_v = wv.value;
      cert.exit_table = exit_table_for(spec, pv, pu);
      certs.push_back(std::move(cert));
    }
  }
  return certs;
}

bool validate_certificate(const ZeroProductCertificate& cert, const DomainSpec& spec, int window) {
  if (window < 2 * spec.diagonal_count()) {
    throw WindowTooSmall("validate_certificate: window " + std::to_string(window) +
                         " is smaller than twice the diagonal count");
  }
  const toeplitz::ShiftOperator op_u(spec, cert.u);
  const toeplitz::ShiftOperator op_v(spec, cert.v);

  // Factors are individually nonzero at the claimed witnesses.
  const toeplitz::WeightResult wu = op_u.weight(cert.witness_u);
  const toeplitz::WeightResult wv = op_v.weight(cert.witness_v);
  if (wu.status != toeplitz::WeightStatus::valid || !(wu.value > 0.0)) return false;
  if (wv.status != toeplitz::WeightStatus::valid || !(wv.value > 0.0)) return false;
  if (std::fabs(wu.value - cert.weight_u) > 1.0e-12 * std::max(1.0, cert.weight_u)) return false;
  if (std::fabs(wv.value - cert.weight_v) > 1.0e-12 * std::max(1.0, cert.weight_v)) return false;

  // The exit table matches the advances and rules out every diagonal.
  const auto expected =
      exit_table_for(spec, cert.v.shift().first, cert.u.shift().first);
  if (cert.exit_table.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const DiagonalExit& got = cert.exit_table[i];
    const DiagonalExit& want = expected[i];
    if (got.offset != want.offset || got.offset_after_second != want.offset_after_second ||
        got.in_after_second != want.in_after_second ||
        got.offset_after_both != want.offset_after_both ||
        got.in_after_both != want.in_after_both) {
      return false;
    }
    if (got.in_after_both) return false;
  }

  // The composite annihilates the whole window, entry by entry.
  const toeplitz::ComposedOperator comp = toeplitz::compose(op_u, op_v);
  if (!comp.is_zero) return false;
  for (const MultiIndex alpha : lattice::window(spec, window)) {
    if (!comp.apply(toeplitz::CoefficientVector::basis(alpha)).empty()) return false;
  }
  return true;
}

}  // namespace bergtop::verify
