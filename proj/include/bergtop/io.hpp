#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bergtop/moments.hpp"
#include "bergtop/toeplitz.hpp"
#include "bergtop/verify.hpp"

namespace bergtop::io {

// Canonical formatting shared by every emitter: 17 significant digits, which
// round-trips any double.
std::string format_double(double v);

// Exact decimal string "p/q" (or "p" for integers) of a rational.
std::string rational_string(const moments::Rational& q);

// Minimal JSON value with canonical, byte-deterministic rendering: object
// keys are sorted, output is compact (no whitespace), doubles use
// format_double.  Only what the emitters below need.
class Json {
 public:
  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }
  static Json number(double v) { return Json(v); }
  static Json integer(long long v) { return Json(v); }
  static Json boolean(bool v) { return Json(v); }
  static Json string(std::string v) { return Json(std::move(v)); }
  static Json null() { return Json(nullptr); }

  static Json index(MultiIndex idx) {
    Json a = array();
    a.push(integer(idx.a1));
    a.push(integer(idx.a2));
    return a;
  }

  Json& set(const std::string& key, Json v);
  Json& push(Json v);
  std::string dump() const;

 private:
  using Object = std::map<std::string, Json>;
  using Array = std::vector<Json>;
  using Value = std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object>;

  template <class T>
  explicit Json(T v) : value_(std::move(v)) {}
  void render(std::string& out) const;

  Value value_;
};

// --- reports -------------------------------------------------------------

std::string member_json(const DomainSpec& spec, MultiIndex idx);

struct OracleVerdicts {
  std::optional<moments::OracleResult> x, y, z;
};

// status "finite"/"divergent"; parts/exact_forms/oracle sections optional.
// exact_forms are stated in units of 1/(4 pi^2) and say so via their "scale"
// field; parts and total carry the full 4 pi^2 normalization.
std::string moment_json(const DomainSpec& spec, moments::MomentIndex idx,
                        const moments::MomentValue& value, bool with_parts, bool with_exact,
                        const std::optional<OracleVerdicts>& oracle);

std::string proposition_json(const verify::PropositionReport& report);

std::string scan_csv(const std::vector<verify::DegreeScanRow>& rows);

std::string zero_products_json(const DomainSpec& spec, int max_degree,
                               const std::vector<verify::ZeroProductCertificate>& certs,
                               const std::vector<bool>& validated);

std::string matrix_json(const DomainSpec& spec, toeplitz::Symbol symbol, int window,
                        const toeplitz::TruncatedMatrix& mat);

// Dense grid: header row of quoted "a1,a2" basis labels, one row per basis
// vector, values in canonical double format.
std::string matrix_csv(const toeplitz::TruncatedMatrix& mat);

// Writes via a temporary file in the same directory plus an atomic rename,
// so readers never observe a partial file.  Throws std::runtime_error on
// I/O failure.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace bergtop::io
