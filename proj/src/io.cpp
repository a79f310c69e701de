#include "bergtop/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bergtop::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string rational_string(const moments::Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Json& Json::set(const std::string& key, Json v) {
  std::get<Object>(value_).insert_or_assign(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  std::get<Array>(value_).push_back(std::move(v));
  return *this;
}

namespace {

void render_string(const std::string& s, std::string& out) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void Json::render(std::string& out) const {
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    out += "null";
  } else if (const auto* b = std::get_if<bool>(&value_)) {
    out += *b ? "true" : "false";
  } else if (const auto* i = std::get_if<long long>(&value_)) {
    out += std::to_string(*i);
  } else if (const auto* d = std::get_if<double>(&value_)) {
    out += format_double(*d);
  } else if (const auto* s = std::get_if<std::string>(&value_)) {
    render_string(*s, out);
  } else if (const auto* a = std::get_if<Array>(&value_)) {
    out += '[';
    bool first = true;
    for (const Json& item : *a) {
      if (!first) out += ',';
      first = false;
      item.render(out);
    }
    out += ']';
  } else {
    const auto& obj = std::get<Object>(value_);
    out += '{';
    bool first = true;
    for (const auto& [key, item] : obj) {  // std::map iterates in sorted key order
      if (!first) out += ',';
      first = false;
      render_string(key, out);
      out += ':';
      item.render(out);
    }
    out += '}';
  }
}

std::string Json::dump() const {
  std::string out;
  render(out);
  out += '\n';
  return out;
}

std::string member_json(const DomainSpec& spec, MultiIndex idx) {
  const bool diag = idx.a1 >= 0 && idx.a2 >= idx.a1;
  const bool width = idx.a2 >= 0 && 2 * idx.a1 + spec.m() - 1 > 2 * idx.a2;
  Json root = Json::object();
  root.set("a1", Json::integer(idx.a1));
  root.set("a2", Json::integer(idx.a2));
  Json constraints = Json::object();
  constraints.set("diagonal", Json::boolean(diag));
  constraints.set("width", Json::boolean(width));
  root.set("constraints", std::move(constraints));
  root.set("m", Json::integer(spec.m()));
  root.set("member", Json::boolean(lattice::member(spec, idx)));
  return root.dump();
}

namespace {

Json oracle_json(const moments::OracleResult& r) {
  Json o = Json::object();
  o.set("abs_error", Json::number(r.abs_error));
  o.set("evaluations", Json::integer(r.evaluations));
  o.set("finite", Json::boolean(r.finite));
  if (r.finite) {
    o.set("value", Json::number(r.value));
  } else {
    o.set("value", Json::null());
  }
  return o;
}

}  // namespace

std::string moment_json(const DomainSpec& spec, moments::MomentIndex idx,
                        const moments::MomentValue& value, bool with_parts, bool with_exact,
                        const std::optional<OracleVerdicts>& oracle) {
  Json root = Json::object();
  root.set("abs_error_bound", value.finite ? Json::number(value.abs_error_bound) : Json::null());
  if (with_exact) {
    Json exact = Json::object();
    exact.set("scale", Json::string("4*pi^2"));
    exact.set("x_part", value.exact.x_rational_known
                            ? Json::string(rational_string(value.exact.x_rational))
                            : Json::null());
    exact.set("y_part", value.exact.y_finite
                            ? Json::string(rational_string(value.exact.y_rational))
                            : Json::null());
    Json z = Json::object();
    z.set("e_power", Json::integer(value.exact.z_e_power));
    z.set("rational", Json::string(rational_string(value.exact.z_rational)));
    z.set("two_power", Json::integer(value.exact.z_two_power));
    exact.set("z_part", std::move(z));
    root.set("exact_forms", std::move(exact));
  }
  root.set("m", Json::integer(spec.m()));
  if (oracle) {
    Json o = Json::object();
    if (oracle->x) o.set("x", oracle_json(*oracle->x));
    if (oracle->y) o.set("y", oracle_json(*oracle->y));
    if (oracle->z) o.set("z", oracle_json(*oracle->z));
    root.set("oracle", std::move(o));
  }
  if (with_parts) {
    Json parts = Json::object();
    parts.set("x_part", value.x_finite ? Json::number(value.x_part) : Json::null());
    parts.set("y_part", value.y_finite ? Json::number(value.y_part) : Json::null());
    parts.set("z_part", Json::number(value.z_part));
    root.set("parts", std::move(parts));
  }
  root.set("s", Json::integer(idx.s));
  root.set("status", Json::string(value.finite ? "finite" : "divergent"));
  root.set("t", Json::integer(idx.t));
  root.set("total", value.finite ? Json::number(value.total) : Json::null());
  return root.dump();
}

std::string proposition_json(const verify::PropositionReport& report) {
  Json root = Json::object();
  root.set("bound_constant", Json::number(report.bound_constant));
  Json checks = Json::object();
  checks.set("bounded", Json::boolean(report.checks.bounded));
  checks.set("degree", Json::boolean(report.checks.degree));
  checks.set("infinite_rank", Json::boolean(report.checks.infinite_rank));
  checks.set("nonzero", Json::boolean(report.checks.nonzero));
  root.set("checks", std::move(checks));
  root.set("degree_floor_m_over_4", Json::integer(report.degree_floor_m_over_4));
  root.set("degree_lattice", Json::integer(report.degree_lattice));
  root.set("degrees_agree", Json::boolean(report.degrees_agree));
  root.set("m", Json::integer(report.m));
  root.set("nonzero_weight", Json::number(report.nonzero_weight));
  root.set("nonzero_witness",
           report.nonzero_witness ? Json::index(*report.nonzero_witness) : Json::null());
  root.set("norm_bound", Json::number(report.norm_bound));
  root.set("ok", Json::boolean(report.checks.all()));
  Json witnesses = Json::array();
  for (const MultiIndex w : report.rank_witnesses) witnesses.push(Json::index(w));
  root.set("rank_witnesses", std::move(witnesses));
  root.set("window", Json::integer(report.window));
  return root.dump();
}

std::string scan_csv(const std::vector<verify::DegreeScanRow>& rows) {
  std::string out = "m,r,degree_lattice,floor_m_over_4,agree\n";
  for (const verify::DegreeScanRow& row : rows) {
    out += std::to_string(row.m) + ',' + std::to_string(row.r) + ',' +
           std::to_string(row.degree_lattice) + ',' + std::to_string(row.floor_m_over_4) + ',' +
           (row.agree ? "true" : "false") + '\n';
  }
  return out;
}

namespace {

Json symbol_json(toeplitz::Symbol sym) {
  Json s = Json::object();
  s.set("a", Json::integer(sym.a));
  s.set("b", Json::integer(sym.b));
  s.set("c", Json::integer(sym.c));
  s.set("d", Json::integer(sym.d));
  return s;
}

}  // namespace

std::string zero_products_json(const DomainSpec& spec, int max_degree,
                               const std::vector<verify::ZeroProductCertificate>& certs,
                               const std::vector<bool>& validated) {
  Json root = Json::object();
  Json list = Json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const verify::ZeroProductCertificate& c = certs[i];
    Json item = Json::object();
    Json table = Json::array();
    for (const verify::DiagonalExit& row : c.exit_table) {
      Json r = Json::object();
      r.set("in_after_both", Json::boolean(row.in_after_both));
      r.set("in_after_second", Json::boolean(row.in_after_second));
      r.set("offset", Json::integer(row.offset));
      r.set("offset_after_both", Json::integer(row.offset_after_both));
      r.set("offset_after_second", Json::integer(row.offset_after_second));
      table.push(std::move(r));
    }
    item.set("exit_table", std::move(table));
    item.set("u", symbol_json(c.u));
    item.set("v", symbol_json(c.v));
    if (i < validated.size()) item.set("validated", Json::boolean(validated[i]));
    item.set("weight_u", Json::number(c.weight_u));
    item.set("weight_v", Json::number(c.weight_v));
    item.set("witness_u", Json::index(c.witness_u));
    item.set("witness_v", Json::index(c.witness_v));
    list.push(std::move(item));
  }
  root.set("certificates", std::move(list));
  root.set("count", Json::integer(static_cast<long long>(certs.size())));
  root.set("m", Json::integer(spec.m()));
  root.set("max_degree", Json::integer(max_degree));
  return root.dump();
}

std::string matrix_json(const DomainSpec& spec, toeplitz::Symbol symbol, int window,
                        const toeplitz::TruncatedMatrix& mat) {
  Json root = Json::object();
  Json entries = Json::array();
  for (const toeplitz::MatrixEntry& e : mat.entries) {
    Json item = Json::object();
    item.set("col", Json::integer(e.col));
    item.set("row", Json::integer(e.row));
    item.set("value", Json::number(e.value));
    entries.push(std::move(item));
  }
  root.set("entries", std::move(entries));
  root.set("m", Json::integer(spec.m()));
  root.set("order", Json::string("diagonal-major"));
  root.set("symbol", symbol_json(symbol));
  root.set("window", Json::integer(window));
  return root.dump();
}

std::string matrix_csv(const toeplitz::TruncatedMatrix& mat) {
  const int n = mat.dim();
  std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
  for (const toeplitz::MatrixEntry& e : mat.entries) dense[e.row][e.col] = e.value;
  const auto label = [&](int i) {
    return '"' + std::to_string(mat.basis[i].a1) + ',' + std::to_string(mat.basis[i].a2) + '"';
  };
  std::string out;
  for (int col = 0; col < n; ++col) {
    out += ',';
    out += label(col);
  }
  out += '\n';
  for (int row = 0; row < n; ++row) {
    out += label(row);
    for (int col = 0; col < n; ++col) {
      out += ',';
      out += format_double(dense[row][col]);
    }
    out += '\n';
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("write_atomic: cannot open " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw std::runtime_error("write_atomic: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write_atomic: cannot rename " + tmp + " to " + path);
  }
}

}  // namespace bergtop::io
