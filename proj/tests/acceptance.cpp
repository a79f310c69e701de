// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// exit code = number of failed criteria.  Each criterion prints its first
// few mismatches to stderr so a failure is diagnosable from the log.
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "bergtop/lattice.hpp"
#include "bergtop/moments.hpp"
#include "bergtop/toeplitz.hpp"
#include "bergtop/verify.hpp"

namespace {

using bergtop::DomainSpec;
using bergtop::MultiIndex;
namespace lattice = bergtop::lattice;
namespace moments = bergtop::moments;
namespace toeplitz = bergtop::toeplitz;
namespace verify = bergtop::verify;

int g_mismatches = 0;

void mismatch(const char* fmt, ...) {
  ++g_mismatches;
  if (g_mismatches > 8) return;  // keep logs readable
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
}

bool oracle_finite(moments::MomentIndex idx, const DomainSpec& spec, double tol) {
  const auto x = moments::quadrature_oracle(idx, spec, moments::Region::X, tol);
  const auto y = moments::quadrature_oracle(idx, spec, moments::Region::Y, tol);
  const auto z = moments::quadrature_oracle(idx, spec, moments::Region::Z, tol);
  return x.finite && y.finite && z.finite;
}

double oracle_total(moments::MomentIndex idx, const DomainSpec& spec, double tol) {
  const auto x = moments::quadrature_oracle(idx, spec, moments::Region::X, tol);
  const auto y = moments::quadrature_oracle(idx, spec, moments::Region::Y, tol);
  const auto z = moments::quadrature_oracle(idx, spec, moments::Region::Z, tol);
  const double four_pi_sq = 4.0 * std::acos(-1.0) * std::acos(-1.0);
  return four_pi_sq * (x.value + y.value + z.value);
}

// 1. Membership of (a1, a2) == finiteness of the closed-form moment at
//    (2a1, 2a2) == the quadrature oracle's own convergence verdict.
bool criterion_1() {
  g_mismatches = 0;
  for (int m = 2; m <= 16; ++m) {
    const DomainSpec spec(m);
    int sampled = 0;
    for (int a1 = 0; a1 <= 20; ++a1) {
      for (int a2 = 0; a2 <= 20; ++a2) {
        const bool member = lattice::member(spec, {a1, a2});
        const moments::MomentIndex idx{2 * a1, 2 * a2};
        const bool closed = moments::moment(idx, spec).finite;
        if (closed != member) {
          mismatch("  C1: m=%d alpha=(%d,%d) member=%d closed-form finite=%d\n", m, a1, a2,
                   member, closed);
        }
        if ((a1 * 21 + a2) % 8 == 0) {
          ++sampled;
          const bool oracle = oracle_finite(idx, spec, 1.0e-8);
          if (oracle != member) {
            mismatch("  C1: m=%d alpha=(%d,%d) member=%d oracle finite=%d\n", m, a1, a2, member,
                     oracle);
          }
        }
      }
    }
    if (sampled < 50) {
      mismatch("  C1: m=%d only %d oracle samples (need >= 50)\n", m, sampled);
    }
  }
  return g_mismatches == 0;
}

// 2. The m = 9 worked example: the membership band and the four verified
//    properties of the distinguished operator, with degree exactly 2.
bool criterion_2() {
  g_mismatches = 0;
  const DomainSpec spec(9);
  for (int a1 = 0; a1 <= 12; ++a1) {
    for (int a2 = 0; a2 <= 12; ++a2) {
      const bool expected = (a1 + 4 > a2) && (a2 >= a1);
      if (lattice::member(spec, {a1, a2}) != expected) {
        mismatch("  C2: membership at (%d,%d) != band predicate\n", a1, a2);
      }
    }
  }
  const verify::PropositionReport rep = verify::verify_proposition(spec, 36);
  if (rep.degree_lattice != 2) mismatch("  C2: degree_lattice=%d != 2\n", rep.degree_lattice);
  if (!rep.nonzero_witness) mismatch("  C2: no nonzero witness\n");
  if (rep.rank_witnesses.size() < 10) {
    mismatch("  C2: only %zu rank witnesses\n", rep.rank_witnesses.size());
  }
  if (!rep.checks.all()) {
    mismatch("  C2: checks nonzero=%d rank=%d bounded=%d degree=%d\n", rep.checks.nonzero,
             rep.checks.infinite_rank, rep.checks.bounded, rep.checks.degree);
  }
  return g_mismatches == 0;
}

// 3. Degree scan over m in [6, 20]: ceil(r/2) always; equal to floor(m/4)
//    for m = 0,1 (mod 4) and larger by exactly one for m = 2,3 (mod 4).
bool criterion_3() {
  g_mismatches = 0;
  const auto rows = verify::degree_scan(6, 20);
  for (const verify::DegreeScanRow& row : rows) {
    const int r = row.m % 2 == 0 ? row.m / 2 : (row.m - 1) / 2;
    if (row.r != r) mismatch("  C3: m=%d r=%d != %d\n", row.m, row.r, r);
    if (row.degree_lattice != (r + 1) / 2) {
      mismatch("  C3: m=%d degree=%d != ceil(r/2)=%d\n", row.m, row.degree_lattice, (r + 1) / 2);
    }
    const int delta = row.degree_lattice - row.floor_m_over_4;
    const int want_delta = (row.m % 4 <= 1) ? 0 : 1;
    if (delta != want_delta) {
      mismatch("  C3: m=%d degree-floor=%d != %d\n", row.m, delta, want_delta);
    }
    if (row.agree != (delta == 0)) mismatch("  C3: m=%d agree flag wrong\n", row.m);
  }
  return g_mismatches == 0;
}

// 4. Closed forms vs quadrature on every finite (s,t) in [0,12]^2 for
//    m in {6,9,12}, and the exact fixture at (0,0) on the m = 6 domain.
bool criterion_4() {
  g_mismatches = 0;
  for (const int m : {6, 9, 12}) {
    const DomainSpec spec(m);
    for (int s = 0; s <= 12; ++s) {
      for (int t = 0; t <= 12; ++t) {
        const moments::MomentValue& mv = moments::moment({s, t}, spec);
        if (!mv.finite) continue;
        const double numeric = oracle_total({s, t}, spec, 1.0e-10);
        const double rel = std::fabs(numeric - mv.total) / mv.total;
        if (!(rel <= 1.0e-8)) {
          mismatch("  C4: m=%d (s,t)=(%d,%d) closed=%.17g oracle=%.17g rel=%.3g\n", m, s, t,
                   mv.total, numeric, rel);
        }
      }
    }
  }
  const DomainSpec spec6(6);
  const double e_sq = std::exp(2.0);
  const double four_pi_sq = 4.0 * std::acos(-1.0) * std::acos(-1.0);
  const double fixture = four_pi_sq * (0.5 + 1.0 / 80.0 + e_sq);
  const double closed = moments::moment({0, 0}, spec6).total;
  if (!(std::fabs(closed - fixture) / fixture <= 1.0e-10)) {
    mismatch("  C4: closed form %.17g vs fixture %.17g\n", closed, fixture);
  }
  const double numeric = oracle_total({0, 0}, spec6, 1.0e-12);
  if (!(std::fabs(numeric - fixture) / fixture <= 1.0e-10)) {
    mismatch("  C4: oracle %.17g vs fixture %.17g\n", numeric, fixture);
  }
  return g_mismatches == 0;
}

// 5. Boundedness: the observed weight supremum over a window of 40 is at
//    most min(1 + 1e-12, sqrt(bound_constant)), and the moment sequence is
//    log-convex along the first index on the full finite grid.
bool criterion_5() {
  g_mismatches = 0;
  for (int m = 6; m <= 16; ++m) {
    const DomainSpec spec(m);
    const toeplitz::ShiftOperator op(spec, toeplitz::Symbol::phi());
    double sup = 0.0;
    for (const MultiIndex alpha : lattice::window(spec, 40)) {
      const toeplitz::WeightResult w = op.weight(alpha);
      if (w.status == toeplitz::WeightStatus::valid) sup = std::max(sup, w.value);
    }
    const double cap = std::min(1.0 + 1.0e-12, std::sqrt(moments::bound_constant(spec, 40)));
    if (!(sup <= cap)) mismatch("  C5: m=%d sup weight %.17g > %.17g\n", m, sup, cap);

    for (int s = 0; s <= 12; ++s) {
      for (int t = 0; t <= 12; ++t) {
        const moments::MomentValue& lo = moments::moment({s, t}, spec);
        const moments::MomentValue& mid = moments::moment({s + 2, t}, spec);
        const moments::MomentValue& hi = moments::moment({s + 4, t}, spec);
        if (!lo.finite || !mid.finite || !hi.finite) continue;
        if (!(mid.total * mid.total <= lo.total * hi.total * (1.0 + 1.0e-12))) {
          mismatch("  C5: m=%d log-convexity fails at (s,t)=(%d,%d)\n", m, s, t);
        }
      }
    }
  }
  return g_mismatches == 0;
}

// 6. Matrix nilpotency is structural: the d-th power of the truncated
//    matrix stores no entries at all, and the (d-1)-th stores some.
bool criterion_6() {
  g_mismatches = 0;
  for (const int m : {6, 9, 12}) {
    const DomainSpec spec(m);
    const toeplitz::ShiftOperator op(spec, toeplitz::Symbol::phi());
    const toeplitz::TruncatedMatrix mat = op.truncated_matrix(4 * m);
    const int d = lattice::nilpotency_degree(spec, 2);
    const toeplitz::TruncatedMatrix at_d = toeplitz::matrix_power(mat, d);
    const toeplitz::TruncatedMatrix before = toeplitz::matrix_power(mat, d - 1);
    if (!at_d.entries.empty()) {
      mismatch("  C6: m=%d power %d keeps %zu entries\n", m, d, at_d.entries.size());
    }
    if (before.entries.empty()) {
      mismatch("  C6: m=%d power %d already empty\n", m, d - 1);
    }
  }
  return g_mismatches == 0;
}

// 7. Zero products at m = 9: at least one certificate, the pair of
//    distinguished symbols among them, and every certificate re-validates.
bool criterion_7() {
  g_mismatches = 0;
  const DomainSpec spec(9);
  const auto certs = verify::zero_product_search(spec, spec.diagonal_count() - 1);
  if (certs.empty()) mismatch("  C7: no certificates found\n");
  const toeplitz::Symbol phi = toeplitz::Symbol::phi();
  bool has_phi_pair = false;
  for (const verify::ZeroProductCertificate& cert : certs) {
    if (cert.u == phi && cert.v == phi) has_phi_pair = true;
    if (!verify::validate_certificate(cert, spec, 36)) {
      mismatch("  C7: certificate u=(%d,%d,%d,%d) v=(%d,%d,%d,%d) fails validation\n", cert.u.a,
               cert.u.b, cert.u.c, cert.u.d, cert.v.a, cert.v.b, cert.v.c, cert.v.d);
    }
  }
  if (!has_phi_pair) mismatch("  C7: (phi, phi) not among the certificates\n");
  return g_mismatches == 0;
}

// 8. Byte determinism of the command-line reports.
#ifdef BERGTOP_CLI_PATH
std::string capture(const std::string& args, int* exit_code) {
  const std::string cmd = std::string(BERGTOP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool criterion_8() {
  g_mismatches = 0;
  for (const char* args : {"verify 9", "scan --m-range 6:20"}) {
    int code1 = -1;
    int code2 = -1;
    const std::string first = capture(args, &code1);
    const std::string second = capture(args, &code2);
    if (code1 != 0 || code2 != 0) {
      mismatch("  C8: '%s' exit codes %d, %d\n", args, code1, code2);
    }
    if (first.empty() || first != second) {
      mismatch("  C8: '%s' outputs differ between runs\n", args);
    }
  }
  return g_mismatches == 0;
}
#else
bool criterion_8() {
  std::fprintf(stderr, "  C8: built without the command-line tool, cannot check\n");
  return false;
}
#endif

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"C1 membership == closed-form finiteness == oracle verdict", criterion_1},
      {"C2 m=9 worked example: band, degree 2, witnesses", criterion_2},
      {"C3 degree scan: ceil(r/2) vs floor(m/4) pattern", criterion_3},
      {"C4 closed forms vs quadrature (rel <= 1e-8) + fixture", criterion_4},
      {"C5 weight supremum bounded; moment log-convexity", criterion_5},
      {"C6 truncated matrix power structurally zero at degree", criterion_6},
      {"C7 zero-product certificates incl. (phi, phi), all valid", criterion_7},
      {"C8 byte-deterministic CLI reports", criterion_8},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const bool ok = c.fn();
    std::printf("%-62s %s\n", c.label, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
