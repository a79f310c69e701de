#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "bergtop/io.hpp"
#include "bergtop/moments.hpp"
#include "bergtop/toeplitz.hpp"
#include "bergtop/verify.hpp"

using bergtop::DomainSpec;
using bergtop::MultiIndex;
using namespace bergtop::io;

TEST_CASE("format_double: canonical 17-digit rendering") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(1.0e300) == "1.0000000000000001e+300");  // nearest double to 1e300
}

TEST_CASE("format_double: round-trips every value") {
  const double values[] = {0.1,    1.0 / 3.0,          7.389056098930650, 0.86570732295783115,
                           1e-12,  311.94093139784161, -0.0625,           2.2250738585072014e-308,
                           1e300,  123456789.12345678, 0.99961412308036568};
  for (const double v : values) {
    const double back = std::stod(format_double(v));
    CHECK(back == v);
  }
}

TEST_CASE("rational_string: exact reduced fractions") {
  using bergtop::moments::Rational;
  CHECK(rational_string(Rational(1, 80)) == "1/80");
  CHECK(rational_string(Rational(3073, 245760)) == "3073/245760");
  CHECK(rational_string(Rational(-3, 6)) == "-1/2");
  CHECK(rational_string(Rational(7)) == "7");
  CHECK(rational_string(Rational(0)) == "0");
}

TEST_CASE("Json: keys are emitted sorted regardless of insertion order") {
  Json a = Json::object();
  a.set("zebra", Json::integer(1));
  a.set("alpha", Json::boolean(true));
  a.set("mid", Json::null());

  Json b = Json::object();
  b.set("mid", Json::null());
  b.set("alpha", Json::boolean(true));
  b.set("zebra", Json::integer(1));

  const std::string expected = "{\"alpha\":true,\"mid\":null,\"zebra\":1}\n";
  CHECK(a.dump() == expected);
  CHECK(b.dump() == expected);
}

TEST_CASE("Json: compact nesting, arrays, and string escaping") {
  Json root = Json::object();
  Json arr = Json::array();
  arr.push(Json::number(0.5));
  arr.push(Json::index(MultiIndex{3, 4}));
  root.set("list", std::move(arr));
  root.set("text", Json::string("a\"b\\c\nd\te\rf\x01g"));
  CHECK(root.dump() ==
        "{\"list\":[0.5,[3,4]],\"text\":\"a\\\"b\\\\c\\nd\\te\\rf\\u0001g\"}\n");
}

TEST_CASE("member_json: golden rows") {
  CHECK(member_json(DomainSpec(9), {1, 3}) ==
        "{\"a1\":1,\"a2\":3,\"constraints\":{\"diagonal\":true,\"width\":true},"
        "\"m\":9,\"member\":true}\n");
  // Width violated: 2*2 + 5 = 9 is not > 2*8.
  CHECK(member_json(DomainSpec(6), {2, 8}) ==
        "{\"a1\":2,\"a2\":8,\"constraints\":{\"diagonal\":true,\"width\":false},"
        "\"m\":6,\"member\":false}\n");
  CHECK(member_json(DomainSpec(9), {-1, 0}) ==
        "{\"a1\":-1,\"a2\":0,\"constraints\":{\"diagonal\":false,\"width\":true},"
        "\"m\":9,\"member\":false}\n");
}

TEST_CASE("moment_json: finite moment with parts, exact forms, and oracle") {
  const DomainSpec spec(6);
  const auto& mv = bergtop::moments::moment({0, 0}, spec);
  bergtop::io::OracleVerdicts verdicts;
  verdicts.z = bergtop::moments::quadrature_oracle({0, 0}, spec, bergtop::moments::Region::Z, 1e-10);
  const std::string text = moment_json(spec, {0, 0}, mv, true, true, verdicts);

  // Byte-level facts: sorted keys, canonical doubles, trailing newline.
  CHECK(text.substr(0, 19) == "{\"abs_error_bound\":");
  CHECK(text.find("\"exact_forms\":{\"scale\":\"4*pi^2\",\"x_part\":\"1/2\",\"y_part\":\"1/80\","
                  "\"z_part\":{\"e_power\":2,\"rational\":\"1/4\",\"two_power\":2}}") !=
        std::string::npos);
  CHECK(text.find("\"status\":\"finite\"") != std::string::npos);
  CHECK(text.find("\"total\":311.94093139784161}") != std::string::npos);
  CHECK(text.back() == '\n');

  // Structural facts via an independent parser.
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["m"] == 6);
  CHECK(doc["s"] == 0);
  CHECK(doc["t"] == 0);
  CHECK(doc["parts"]["z_part"].get<double>() == doctest::Approx(mv.z_part).epsilon(1e-15));
  CHECK(doc["oracle"]["z"]["finite"] == true);
  CHECK(doc["oracle"]["z"]["value"].get<double>() ==
        doctest::Approx(7.3890560989306495).epsilon(1e-9));
  CHECK(!doc["oracle"].contains("x"));
}

TEST_CASE("moment_json: divergent moment carries nulls") {
  const DomainSpec spec(6);
  const auto& mv = bergtop::moments::moment({4, 0}, spec);  // X-part diverges for s > t
  REQUIRE(!mv.finite);
  const std::string text = moment_json(spec, {4, 0}, mv, true, false, std::nullopt);
  CHECK(text.substr(0, 23) == "{\"abs_error_bound\":null");
  CHECK(text.find("\"status\":\"divergent\"") != std::string::npos);
  CHECK(text.find("\"total\":null}") != std::string::npos);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["parts"]["x_part"].is_null());
  CHECK(doc["parts"]["z_part"].is_number());
  CHECK(!doc.contains("exact_forms"));
}

TEST_CASE("proposition_json: parses back with every field") {
  const auto rep = bergtop::verify::verify_proposition(DomainSpec(9), 16);
  const std::string text = proposition_json(rep);
  CHECK(text.substr(0, 18) == "{\"bound_constant\":");
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["m"] == 9);
  CHECK(doc["window"] == 16);
  CHECK(doc["ok"] == true);
  CHECK(doc["checks"]["bounded"] == true);
  CHECK(doc["checks"]["degree"] == true);
  CHECK(doc["checks"]["infinite_rank"] == true);
  CHECK(doc["checks"]["nonzero"] == true);
  CHECK(doc["nonzero_witness"] == nlohmann::json::array({0, 2}));
  CHECK(doc["degree_lattice"] == 2);
  CHECK(doc["rank_witnesses"].size() == rep.rank_witnesses.size());
  CHECK(doc["rank_witnesses"][0] == nlohmann::json::array({0, 2}));
}

TEST_CASE("scan_csv: golden table") {
  const auto rows = bergtop::verify::degree_scan(9, 11);
  CHECK(scan_csv(rows) ==
        "m,r,degree_lattice,floor_m_over_4,agree\n"
        "9,4,2,2,true\n"
        "10,5,3,2,false\n"
        "11,5,3,2,false\n");
}

TEST_CASE("zero_products_json: certificates with validation verdicts") {
  const DomainSpec spec(9);
  const auto certs = bergtop::verify::zero_product_search(spec, 2);
  REQUIRE(certs.size() == 4);
  std::vector<bool> validated;
  for (const auto& cert : certs) {
    validated.push_back(bergtop::verify::validate_certificate(cert, spec, 16));
  }
  const std::string text = zero_products_json(spec, 2, certs, validated);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["count"] == 4);
  CHECK(doc["m"] == 9);
  CHECK(doc["max_degree"] == 2);
  REQUIRE(doc["certificates"].size() == 4);
  for (const auto& item : doc["certificates"]) {
    CHECK(item["validated"] == true);
    CHECK(item["weight_u"].get<double>() > 0.0);
    CHECK(item["exit_table"].size() == 4);
    for (const auto& row : item["exit_table"]) {
      CHECK(row["in_after_both"] == false);
    }
  }
}

TEST_CASE("matrix_json and matrix_csv: tiny golden truncation") {
  const DomainSpec spec(9);
  const bergtop::toeplitz::ShiftOperator op(spec, bergtop::toeplitz::Symbol::phi());
  const auto mat = op.truncated_matrix(2);
  REQUIRE(mat.dim() == 6);
  REQUIRE(mat.entries.size() == 1);

  const auto doc = nlohmann::json::parse(matrix_json(spec, bergtop::toeplitz::Symbol::phi(), 2, mat));
  CHECK(doc["order"] == "diagonal-major");
  CHECK(doc["window"] == 2);
  CHECK(doc["symbol"] == nlohmann::json({{"a", 1}, {"b", 1}, {"c", 0}, {"d", 0}}));
  REQUIRE(doc["entries"].size() == 1);
  CHECK(doc["entries"][0]["row"] == 2);
  CHECK(doc["entries"][0]["col"] == 5);
  CHECK(doc["entries"][0]["value"].get<double>() ==
        doctest::Approx(0.86570732295783115).epsilon(1e-14));

  CHECK(matrix_csv(mat) ==
        ",\"0,0\",\"1,1\",\"2,2\",\"0,1\",\"1,2\",\"0,2\"\n"
        "\"0,0\",0,0,0,0,0,0\n"
        "\"1,1\",0,0,0,0,0,0\n"
        "\"2,2\",0,0,0,0,0,0.86570732295783115\n"
        "\"0,1\",0,0,0,0,0,0\n"
        "\"1,2\",0,0,0,0,0,0\n"
        "\"0,2\",0,0,0,0,0,0\n");
}

TEST_CASE("write_atomic: round-trip, overwrite, and no leftover temp file") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bergtop-io-test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.json";

  write_atomic(target.string(), "{\"k\":1}\n");
  {
    std::ifstream in(target);
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == "{\"k\":1}\n");
  }
  write_atomic(target.string(), "replaced\n");
  {
    std::ifstream in(target);
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == "replaced\n");
  }
  CHECK(!fs::exists(target.string() + ".tmp"));

  CHECK_THROWS_AS(write_atomic((dir / "no-such-subdir" / "x.json").string(), "y"),
                  std::runtime_error);
  fs::remove_all(dir);
}
