// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qukit/qukit.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

using json = nlohmann::json;

namespace {

// Takes ownership of a returned string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  qk_string_free(s);
  return out;
}

qk_numeral* num(const char* text, int k) {
  qk_numeral* a = nullptr;
  REQUIRE(qk_numeral_parse(text, k, &a) == QK_OK);
  return a;
}

std::string fmt(const qk_numeral* a) {
  char* s = nullptr;
  REQUIRE(qk_numeral_format(a, &s) == QK_OK);
  return take(s);
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status names and version") {
  CHECK(std::string(qk_version()) == "0.1.0");
  CHECK(std::string(qk_status_name(QK_OK)) == "OK");
  CHECK(std::string(qk_status_name(QK_ERR_INVALID_SPACING)) == "InvalidSpacing");
  CHECK(std::string(qk_status_name(QK_ERR_CONFIG)) == "ConfigError");
  CHECK(std::string(qk_status_name(QK_ERR_INTERNAL)) == "InternalError");
  CHECK(std::string(qk_status_name(static_cast<qk_status>(99))) == "Unknown");
}

TEST_CASE("numeral handles") {
  qk_numeral* a = num("013-470", 10);
  qk_numeral* b = num("13-47", 10);
  int eq = -1, c = 9;
  CHECK(qk_numeral_eq_arith(a, b, &eq) == QK_OK);
  CHECK(eq == 1);
  CHECK(qk_numeral_cmp(a, b, &c) == QK_OK);
  CHECK(c == 0);

  qk_numeral* d = nullptr;
  CHECK(qk_numeral_sub(a, b, &d) == QK_OK);
  CHECK(fmt(d) == "0+");
  qk_numeral_free(d);

  qk_numeral* t = nullptr;
  CHECK(qk_numeral_trim(a, &t) == QK_OK);
  CHECK(fmt(t) == "13-47");
  qk_numeral* p = nullptr;
  CHECK(qk_numeral_pad(t, 6, 3, &p) == QK_OK);
  CHECK(fmt(p) == "013-470");
  qk_numeral_free(t);
  qk_numeral_free(p);

  char* v = nullptr;
  CHECK(qk_numeral_value(b, &v) == QK_OK);
  CHECK(take(v) == "-1347/100");
  double e = 0;
  CHECK(qk_numeral_energy(a, "magnitude", 1.0, &e) == QK_OK);
  CHECK(e == doctest::Approx(13.47));

  char* js = nullptr;
  CHECK(qk_numeral_to_json(b, &js) == QK_OK);
  const std::string text = take(js);
  qk_numeral* back = nullptr;
  CHECK(qk_numeral_from_json(text.c_str(), &back) == QK_OK);
  CHECK(fmt(back) == "13-47");
  qk_numeral_free(back);
  qk_numeral_free(a);
  qk_numeral_free(b);

  qk_numeral* s = num("100+111", 2);
  qk_numeral* n = nullptr;
  CHECK(qk_numeral_succ(s, &n) == QK_OK);
  CHECK(fmt(n) == "101+000");
  qk_numeral* q = nullptr;
  CHECK(qk_numeral_pred(n, &q) == QK_OK);
  CHECK(fmt(q) == "100+111");
  for (auto* x : {s, n, q}) qk_numeral_free(x);

  qk_numeral* enc = nullptr;
  CHECK(qk_numeral_encode("-1271/100", 10, &enc) == QK_OK);
  CHECK(fmt(enc) == "12-71");
  char* conv = nullptr;
  qk_numeral* sixth = num("0+1", 6);
  CHECK(qk_numeral_convert_base(sixth, 10, &conv) == QK_OK);
  const json cj = json::parse(take(conv));
  CHECK(cj["provenance"] == "converted");
  qk_numeral_free(sixth);
  qk_numeral_free(enc);
  qk_numeral_free(nullptr);
}

TEST_CASE("errors leave outputs untouched and set the message") {
  qk_numeral* a = reinterpret_cast<qk_numeral*>(0x1);
  CHECK(qk_numeral_parse("12-71", 2, &a) == QK_ERR_PARSE);
  CHECK(a == reinterpret_cast<qk_numeral*>(0x1));
  CHECK(std::string(qk_last_error()).size() > 0);
  qk_numeral* ok = nullptr;
  CHECK(qk_numeral_parse("1+", 2, &ok) == QK_OK);
  CHECK(std::string(qk_last_error()).empty());
  qk_numeral* three = num("1+", 3);
  qk_numeral* out = nullptr;
  CHECK(qk_numeral_add(ok, three, &out) == QK_ERR_BASE_MISMATCH);
  CHECK(out == nullptr);
  CHECK(qk_numeral_encode("1/3", 10, &out) == QK_ERR_NOT_REPRESENTABLE);
  CHECK(qk_numeral_format(nullptr, nullptr) == QK_ERR_INVALID_ARGUMENT);
  CHECK(qk_numeral_from_json("{not json", &out) == QK_ERR_CONFIG);
  qk_numeral_free(ok);
  qk_numeral_free(three);
}

TEST_CASE("superpositions") {
  const char* doc = R"([{"label":{"k":2,"gamma":"+","digits":[0],"m":0},"re":0.7071067811865476,"im":0},
                        {"label":{"k":2,"gamma":"+","digits":[1],"m":0},"re":0.7071067811865476,"im":0}])";
  qk_superposition* s = nullptr;
  REQUIRE(qk_superposition_from_json(doc, 0, &s) == QK_OK);
  double n2 = 0, re = 0, im = 1, p = 0;
  CHECK(qk_superposition_norm2(s, &n2) == QK_OK);
  CHECK(n2 == doctest::Approx(1.0));
  CHECK(qk_superposition_inner(s, s, &re, &im) == QK_OK);
  CHECK(re == doctest::Approx(1.0));
  CHECK(im == 0.0);
  CHECK(qk_superposition_prob_close(s, s, 1, &p) == QK_OK);
  CHECK(p == doctest::Approx(0.5));
  char* out = nullptr;
  CHECK(qk_superposition_to_json(s, &out) == QK_OK);
  CHECK(json::parse(take(out)).size() == 2);
  qk_superposition_free(s);

  const char* half = R"([{"label":{"k":2,"gamma":"+","digits":[0],"m":0},"re":0.5}])";
  qk_superposition* h = nullptr;
  CHECK(qk_superposition_from_json(half, 0, &h) == QK_ERR_NOT_NORMALIZED);
  CHECK(qk_superposition_from_json(half, 1, &h) == QK_OK);
  qk_superposition_free(h);
}

TEST_CASE("sequences") {
  qk_sequence* t = nullptr;
  REQUIRE(qk_sequence_from_json(R"({"family":"truncation","k":2,"value":"1/3"})", &t) == QK_OK);
  char* v = nullptr;
  CHECK(qk_cauchy_test(t, 8, 32, &v) == QK_OK);
  CHECK(json::parse(take(v))["status"] == "PASS");
  double p = 0;
  CHECK(qk_cauchy_prob(t, 8, 32, &p) == QK_OK);
  CHECK(p == 1.0);
  qk_numeral* c = nullptr;
  CHECK(qk_canonical(t, 6, 32, &c) == QK_OK);
  CHECK(fmt(c) == "0+010101");
  qk_numeral_free(c);
  char* e = nullptr;
  CHECK(qk_energy_sequence(t, "digit-sum", 1.0, 32, 16, 1.0 / 1024, &e) == QK_OK);
  CHECK(json::parse(take(e))["verdict"] == "DIVERGENT");
  char* eq = nullptr;
  CHECK(qk_equivalent(t, t, 4, 32, &eq) == QK_OK);
  CHECK(json::parse(take(eq))["status"] == "PASS");

  qk_sequence* alt = nullptr;
  REQUIRE(qk_sequence_from_json(R"({"family":"alternating","k":2,"a":"0+","b":"1+"})", &alt) == QK_OK);
  CHECK(qk_canonical(alt, 3, 32, &c) == QK_ERR_NOT_CAUCHY);
  qk_sequence_free(alt);
  qk_sequence_free(t);
  CHECK(qk_sequence_from_json(R"({"family":"nope"})", &t) == QK_ERR_CONFIG);
}

TEST_CASE("lattices and frames") {
  qk_lattice* l = nullptr;
  REQUIRE(qk_lattice_create(0, 2, "0", 3, 1, 1, &l) == QK_OK);
  char* j = nullptr;
  CHECK(qk_lattice_to_json(l, &j) == QK_OK);
  const json lj = json::parse(take(j));
  CHECK(lj["points_per_dim"] == "8");
  CHECK(lj["spacing"] == "1/2");
  const uint64_t sp[] = {3};
  char* loc = nullptr;
  CHECK(qk_lattice_point_location(l, sp, 1, 2, &loc) == QK_OK);
  const json pj = json::parse(take(loc));
  CHECK(pj["space"][0] == "3/2");
  CHECK(pj["time"] == "1");
  qk_numeral* c = nullptr;
  CHECK(qk_lattice_image_component(l, 7, &c) == QK_OK);
  CHECK(fmt(c) == "11+1");
  qk_numeral_free(c);
  CHECK(qk_lattice_image_component(l, 8, &c) == QK_ERR_INDEX_OUT_OF_RANGE);
  qk_lattice_free(l);
  CHECK(qk_lattice_create(0, 3, "0", 2, 3, 1, &l) == QK_ERR_INVALID_SPACING);

  qk_frame_graph* g = nullptr;
  REQUIRE(qk_frame_graph_from_json(R"({"topology":{"kind":"finite-chain","j_min":0,"j_max":1},
      "frames":[{"j":0,"k":2,"g":"0"},{"j":1,"k":2,"g":"0"}]})", &g) == QK_OK);
  int vis = -1;
  CHECK(qk_frame_graph_visible(g, R"({"j":0,"k":2,"g":"0"})", R"({"j":1,"k":2,"g":"0"})", &vis) == QK_OK);
  CHECK(vis == 1);
  CHECK(qk_frame_graph_visible(g, R"({"j":1,"k":2,"g":"0"})", R"({"j":0,"k":2,"g":"0"})", &vis) == QK_OK);
  CHECK(vis == 0);
  CHECK(qk_frame_graph_visible(g, R"({"j":5,"k":2,"g":"0"})", R"({"j":0,"k":2,"g":"0"})", &vis) ==
        QK_ERR_UNKNOWN_FRAME);
  qk_frame_graph_free(g);
}

TEST_CASE("qk_run") {
  char* out = nullptr;
  REQUIRE(qk_run("encode", R"({"k":10,"text":"12-71"})", &out) == QK_OK);
  const std::string lines = take(out);
  CHECK(json::parse(lines.substr(0, lines.find('\n')))["value"] == "-1271/100");
  CHECK(qk_run("lattice", R"({"k":2,"L":3,"m":4,"D":1})", &out) == QK_ERR_INVALID_SPACING);
  CHECK(std::string(qk_last_error()).find("m") != std::string::npos);
  CHECK(qk_run("encode", R"({"k":10,"text":"1+","bogus":1})", &out) == QK_ERR_CONFIG);
  CHECK(qk_run("nope", "{}", &out) == QK_ERR_CONFIG);
}

}  // TEST_SUITE
