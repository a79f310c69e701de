// bergtop: weighted-shift Toeplitz operators on Bergman spaces of a family
// of unbounded complete Reinhardt domains in C^2, indexed by an integer
// parameter m >= 2.
//
// Exit codes: 0 success, 1 verification failure or runtime failure,
// 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "bergtop/errors.hpp"
#include "bergtop/figures.hpp"
#include "bergtop/io.hpp"
#include "bergtop/lattice.hpp"
#include "bergtop/moments.hpp"
#include "bergtop/toeplitz.hpp"
#include "bergtop/verify.hpp"

namespace {

using namespace bergtop;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    io::write_atomic(out_path, content);
  }
}

// Precedence: --precision flag, then BERGTOP_PRECISION, then 1e-10.
double resolve_precision(const std::optional<double>& flag) {
  double value = 1.0e-10;
  if (const char* env = std::getenv("BERGTOP_PRECISION"); env && !flag) {
    char* end = nullptr;
    value = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw std::invalid_argument("BERGTOP_PRECISION is not a number: " + std::string(env));
    }
  }
  if (flag) value = *flag;
  if (!(value >= 1.0e-14 && value <= 1.0e-2)) {
    throw std::invalid_argument("precision must lie in [1e-14, 1e-2]");
  }
  return value;
}

toeplitz::Symbol parse_symbol(const std::string& text) {
  toeplitz::Symbol sym;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%d,%d,%d,%d%c", &sym.a, &sym.b, &sym.c, &sym.d, &tail) != 4) {
    throw std::invalid_argument("--symbol expects four integers a,b,c,d, got '" + text + "'");
  }
  return sym;
}

std::pair<int, int> parse_range(const std::string& text) {
  int lo = 0;
  int hi = 0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%d:%d%c", &lo, &hi, &tail) != 2) {
    throw std::invalid_argument("--m-range expects LO:HI, got '" + text + "'");
  }
  return {lo, hi};
}

struct Args {
  int m = 0;
  int a1 = 0, a2 = 0;
  int s = 0, t = 0;
  std::optional<int> window;
  std::optional<double> precision;
  std::optional<double> extent;
  long budget = 2000000;
  int max_degree = 0;
  bool parts = false, exact = false, check = false;
  std::string out, format = "csv", symbol = "1,1,0,0", which, range;
};

int run_member(const Args& a) {
  const DomainSpec spec(a.m);
  emit(a.out, io::member_json(spec, MultiIndex{a.a1, a.a2}));
  return 0;
}

int run_moment(const Args& a) {
  const DomainSpec spec(a.m);
  const moments::MomentIndex idx{a.s, a.t};
  const moments::MomentValue& value = moments::moment(idx, spec);
  const double tol = resolve_precision(a.precision);  // validated even without --check
  std::optional<io::OracleVerdicts> oracle;
  if (a.check) {
    io::OracleVerdicts v;
    v.x = moments::quadrature_oracle(idx, spec, moments::Region::X, tol, a.budget);
    v.y = moments::quadrature_oracle(idx, spec, moments::Region::Y, tol, a.budget);
    v.z = moments::quadrature_oracle(idx, spec, moments::Region::Z, tol, a.budget);
    oracle = v;
  }
  emit(a.out, io::moment_json(spec, idx, value, a.parts, a.exact, oracle));
  return 0;
}

int run_verify(const Args& a) {
  const DomainSpec spec(a.m);
  const int window = a.window.value_or(4 * a.m);
  const verify::PropositionReport report = verify::verify_proposition(spec, window);
  emit(a.out, io::proposition_json(report));
  return report.checks.all() ? 0 : 1;
}

int run_matrix(const Args& a) {
  const DomainSpec spec(a.m);
  const toeplitz::Symbol sym = parse_symbol(a.symbol);
  const int window = a.window.value_or(4 * a.m);
  const toeplitz::ShiftOperator op(spec, sym);
  const toeplitz::TruncatedMatrix mat = op.truncated_matrix(window);
  if (a.format == "json") {
    emit(a.out, io::matrix_json(spec, sym, window, mat));
  } else if (a.format == "csv") {
    emit(a.out, io::matrix_csv(mat));
  } else {
    throw std::invalid_argument("--format must be csv or json, got '" + a.format + "'");
  }
  return 0;
}

int run_figure(const Args& a) {
  const DomainSpec spec(a.m);
  std::string svg;
  if (a.which == "domain") {
    svg = figures::domain_svg(spec, a.extent.value_or(6.0));
  } else if (a.which == "lattice") {
    const int fallback = std::max(8, 2 * spec.diagonal_count() + 4);
    svg = figures::lattice_svg(spec, static_cast<int>(a.extent.value_or(fallback)));
  } else {
    throw std::invalid_argument("--which must be domain or lattice, got '" + a.which + "'");
  }
  emit(a.out, svg);
  return 0;
}

int run_scan(const Args& a) {
  const auto [lo, hi] = parse_range(a.range);
  emit(a.out, io::scan_csv(verify::degree_scan(lo, hi)));
  return 0;
}

int run_zero_product(const Args& a) {
  const DomainSpec spec(a.m);
  const int max_degree = a.max_degree > 0 ? a.max_degree : spec.diagonal_count() - 1;
  const int window = a.window.value_or(4 * a.m);
  const auto certs = verify::zero_product_search(spec, max_degree);
  std::vector<bool> validated;
  bool all_good = !certs.empty();
  for (const verify::ZeroProductCertificate& cert : certs) {
    const bool good = verify::validate_certificate(cert, spec, window);
    validated.push_back(good);
    all_good = all_good && good;
  }
  emit(a.out, io::zero_products_json(spec, max_degree, certs, validated));
  return all_good ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weighted-shift Toeplitz operators on Bergman spaces of a family of "
      "unbounded Reinhardt domains"};
  app.require_subcommand(1);
  Args a;

  CLI::App* member = app.add_subcommand("member", "decide admissibility of an exponent pair");
  member->add_option("m", a.m, "domain parameter (>= 2)")->required();
  member->add_option("a1", a.a1, "first exponent")->required();
  member->add_option("a2", a.a2, "second exponent")->required();
  member->add_option("--out", a.out, "write to file instead of stdout");

  CLI::App* moment = app.add_subcommand("moment", "radial moment M(s, t) of the domain");
  moment->add_option("m", a.m, "domain parameter (>= 2)")->required();
  moment->add_option("s", a.s, "|z1| exponent")->required();
  moment->add_option("t", a.t, "|z2| exponent")->required();
  moment->add_flag("--parts", a.parts, "include the three region integrals");
  moment->add_flag("--exact", a.exact, "include exact closed forms (units of 1/(4 pi^2))");
  moment->add_flag("--check", a.check, "cross-check each region by adaptive quadrature");
  moment->add_option("--precision", a.precision,
                     "oracle relative tolerance (default 1e-10; env BERGTOP_PRECISION)");
  moment->add_option("--budget", a.budget, "oracle subdivision budget");
  moment->add_option("--out", a.out, "write to file instead of stdout");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check the distinguished operator's four properties");
  verify_cmd->add_option("m", a.m, "domain parameter (>= 6)")->required();
  verify_cmd->add_option("--window", a.window, "lattice window size (default 4m)");
  verify_cmd->add_option("--out", a.out, "write to file instead of stdout");

  CLI::App* matrix = app.add_subcommand("matrix", "finite section of a shift operator");
  matrix->add_option("m", a.m, "domain parameter (>= 2)")->required();
  matrix->add_option("--symbol", a.symbol, "symbol exponents a,b,c,d (default 1,1,0,0)");
  matrix->add_option("--window", a.window, "lattice window size (default 4m)");
  matrix->add_option("--format", a.format, "csv (dense grid) or json (sparse entries)");
  matrix->add_option("--out", a.out, "write to file instead of stdout");

  CLI::App* figure = app.add_subcommand("figure", "SVG view of the domain or the lattice");
  figure->add_option("m", a.m, "domain parameter (>= 2)")->required();
  figure->add_option("--which", a.which, "domain or lattice")->required();
  figure->add_option("--extent", a.extent, "axis range (default: domain 6.0, lattice fits r)");
  figure->add_option("--out", a.out, "write to file instead of stdout");

  CLI::App* scan = app.add_subcommand("scan", "nilpotency degree table over a parameter range");
  scan->add_option("--m-range", a.range, "inclusive range LO:HI")->required();
  scan->add_option("--out", a.out, "write to file instead of stdout");

  CLI::App* zero = app.add_subcommand("zero-product", "two nonzero factors with zero composite");
  zero->add_option("m", a.m, "domain parameter (>= 6)")->required();
  zero->add_option("--max-degree", a.max_degree, "largest factor advance (default r-1)");
  zero->add_option("--window", a.window, "validation window (default 4m)");
  zero->add_option("--out", a.out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (member->parsed()) return run_member(a);
    if (moment->parsed()) return run_moment(a);
    if (verify_cmd->parsed()) return run_verify(a);
    if (matrix->parsed()) return run_matrix(a);
    if (figure->parsed()) return run_figure(a);
    if (scan->parsed()) return run_scan(a);
    if (zero->parsed()) return run_zero_product(a);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
