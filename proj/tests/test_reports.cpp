#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hankelforge/report_io.hpp"

using namespace hankelforge;

namespace {

CertificationReport sample_report() {
  CertificationReport rep;
  rep.cls = FunctionClass::StarlikeHalf;
  rep.bound = theoretical_bound(rep.cls);
  rep.search_max = 0.065972222;
  rep.witness = {0.408248290463863, cplx(1.0, 0.0), cplx(1.0, 0.0)};
  rep.gap = rep.bound.value() - rep.search_max;
  rep.diagnostics.push_back({0.5, 0.06, 0.061});
  rep.evaluations = 12345;
  rep.tau3_note = "tau3 on the circle";
  return rep;
}

}  // namespace

TEST_CASE("format_double uses 15 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-1.0 / 36.0) == "-0.0277777777777778");
  CHECK(format_double(19.0 / 288.0) == "0.0659722222222222");
}

TEST_CASE("certification report JSON carries the exact bound and witness") {
  const std::string json = emit_report(sample_report(), OutputFormat::json);
  CHECK(json.find("\"bound_exact\":\"19/288\"") != std::string::npos);
  CHECK(json.find("\"theoretical_bound\":\"19/288\"") != std::string::npos);
  CHECK(json.find("\"tau1\":0.408248290463863") != std::string::npos);
  CHECK(json.find("\"search_max\":") != std::string::npos);
  CHECK(json.find("\"diagnostics\":[") != std::string::npos);
  CHECK(json.find("\"slice_max\":0.06") != std::string::npos);
  // Balanced braces, single trailing newline.
  CHECK(std::count(json.begin(), json.end(), '{') == std::count(json.begin(), json.end(), '}'));
  CHECK(json.back() == '\n');
}

TEST_CASE("certification report CSV flattens the witness") {
  const std::string csv = emit_report(sample_report(), OutputFormat::csv);
  const auto header_end = csv.find('\n');
  REQUIRE(header_end != std::string::npos);
  const std::string header = csv.substr(0, header_end);
  CHECK(header.find("witness_tau1") != std::string::npos);
  CHECK(header.find("witness_tau3_im") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(std::count(header.begin(), header.end(), ',') ==
        std::count(csv.begin() + static_cast<long>(header_end) + 1, csv.end(), ','));
}

TEST_CASE("empty diagnostics still emit valid JSON") {
  CertificationReport rep = sample_report();
  rep.diagnostics.clear();
  const std::string json = emit_report(rep, OutputFormat::json);
  CHECK(json.find("\"diagnostics\":[]") != std::string::npos);
  CHECK(std::count(json.begin(), json.end(), '{') == std::count(json.begin(), json.end(), '}'));
}

TEST_CASE("emission is deterministic") {
  const CertificationReport rep = sample_report();
  CHECK(emit_report(rep, OutputFormat::json) == emit_report(rep, OutputFormat::json));
  CHECK(emit_report(rep, OutputFormat::text) == emit_report(rep, OutputFormat::text));
}

TEST_CASE("extremal report serialization") {
  const ExtremalReport rep = extremal_check(FunctionClass::ConvexHalf);
  const std::string json = emit_report(rep, OutputFormat::json);
  CHECK(json.find("\"bound_exact\":\"1/144\"") != std::string::npos);
  CHECK(json.find("\"membership_ok\":true") != std::string::npos);
  const std::string text = emit_report(rep, OutputFormat::text);
  CHECK(text.find("1/144") != std::string::npos);
}

TEST_CASE("key-value emission across formats") {
  const KeyValues kv{{"value", "1"}, {"branch", "i_sum"}};
  CHECK(emit_key_values(kv, OutputFormat::json) == "{\"value\":1,\"branch\":\"i_sum\"}\n");
  CHECK(emit_key_values(kv, OutputFormat::csv) == "value,branch\n1,i_sum\n");
  CHECK(emit_key_values(kv, OutputFormat::text) == "value = 1\nbranch = i_sum\n");
}

TEST_CASE("format names parse") {
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK(!parse_format("yaml"));
}
