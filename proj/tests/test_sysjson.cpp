#include <doctest.h>

#include <fstream>
#include <sstream>

#include "examples.hpp"
#include "support.hpp"

using namespace nhtest;

TEST_CASE("builtin systems cover the bundled examples") {
  auto names = builtin_system_names();
  CHECK(names.size() == 15);  // A1..A11, B2, G2, D4, A1~
  for (const auto& name : names) {
    CHECK(is_builtin_system(name));
    NamedSystem ns = builtin_system(name);
    CHECK(ns.name == name);
    CHECK(ns.system.rank() >= 1);
  }
  CHECK_FALSE(is_builtin_system("E8"));

  NamedSystem a11 = builtin_system("A11");
  CHECK(a11.system.rank() == 11);
  CHECK(a11.system.generator_index("sa") == 9);
  CHECK(a11.system.generator_index("sb") == 10);

  NamedSystem d4 = builtin_system("D4");
  int s = d4.system.generator_index("s"), t = d4.system.generator_index("t");
  int u = d4.system.generator_index("u"), v = d4.system.generator_index("v");
  CHECK(d4.system.coxeter_order(s, t) == 3);
  CHECK(d4.system.coxeter_order(s, u) == 2);
  CHECK(d4.system.coxeter_order(s, v) == 2);
  CHECK(d4.system.coxeter_order(u, v) == 2);
  CHECK(d4.system.coxeter_order(t, u) == 3);
  CHECK(d4.system.coxeter_order(t, v) == 3);
}

TEST_CASE("the shipped system files match the builtins") {
  struct FileCase {
    const char* file;
    const char* name;
  };
  const FileCase files[] = {
      {"a1.json", "A1"}, {"a2.json", "A2"},   {"a3.json", "A3"},   {"a4.json", "A4"},
      {"a5.json", "A5"}, {"a6.json", "A6"},   {"a7.json", "A7"},   {"a8.json", "A8"},
      {"a9.json", "A9"}, {"a10.json", "A10"}, {"a11.json", "A11"}, {"b2.json", "B2"},
      {"g2.json", "G2"}, {"d4.json", "D4"},   {"a1-affine.json", "A1~"},
  };
  for (const auto& fc : files) {
    std::ifstream in(std::string(NILHECKE_DATA_DIR "/systems/") + fc.file);
    REQUIRE_MESSAGE(in.good(), fc.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    NamedSystem from_file = system_from_json_text(buf.str());
    NamedSystem builtin = builtin_system(fc.name);
    CHECK(from_file.name == fc.name);
    REQUIRE(from_file.system.rank() == builtin.system.rank());
    for (int s = 0; s < builtin.system.rank(); ++s) {
      CHECK(from_file.system.generator_name(s) == builtin.system.generator_name(s));
      for (int t = 0; t < builtin.system.rank(); ++t) {
        CHECK(from_file.system.cartan(s, t) == builtin.system.cartan(s, t));
        CHECK(from_file.system.coxeter_order(s, t) == builtin.system.coxeter_order(s, t));
      }
    }
  }
}

TEST_CASE("system files parse with optional Coxeter overrides") {
  NamedSystem ns = system_from_json_text(R"({
    "name": "affine",
    "generators": ["s", "t"],
    "cartan": [[2, -2], [-2, 2]],
    "coxeter_matrix": [[1, "inf"], ["inf", 1]]
  })");
  CHECK(ns.name == "affine");
  CHECK(ns.system.coxeter_order(0, 1) == kInfiniteOrder);

  auto expect_parse_error = [](const std::string& text) {
    bool caught = false;
    try {
      system_from_json_text(text);
    } catch (const Error& e) {
      caught = true;
      CHECK(e.code() == ErrorCode::Parse);
    }
    CHECK(caught);
  };
  expect_parse_error("not json at all");
  expect_parse_error(R"({"generators": ["s"]})");
  expect_parse_error(R"({"cartan": [[2, -1], [-1, 2]], "coxeter_matrix": [[1, 0.5], [0.5, 1]]})");
  expect_parse_error(R"({"cartan": "no"})");
}

TEST_CASE("word and bit string parsing") {
  CoxeterSystem d4 = make_D4();
  CHECK(parse_word(d4, "s u v") == std::vector<int>({0, 2, 3}));
  CHECK(parse_word(d4, "s,u,v") == std::vector<int>({0, 2, 3}));
  CHECK(parse_word(d4, "  s\tu  v ") == std::vector<int>({0, 2, 3}));
  CHECK(parse_word(d4, "").empty());

  bool caught = false;
  try {
    parse_word(d4, "s q");
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == ErrorCode::BadGenerator);
  }
  CHECK(caught);

  CHECK(parse_bits("0101", 4) == Bits({0, 1, 0, 1}));
  caught = false;
  try {
    parse_bits("01", 3);
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
  CHECK(caught);
  caught = false;
  try {
    parse_bits("012", 3);
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK(caught);
}

TEST_CASE("JSON reports round-trip byte for byte") {
  NamedSystem ns = builtin_system("D4");
  Expression w = make_expression(ns.system, parse_word(ns.system, "s u v t s u v"));
  Element x = ns.system.element_from_word(parse_word(ns.system, "s u v"));
  SubexprFilter filter;
  filter.no_d1 = true;
  filter.exact_defect = 0;

  GramReport report = gram_matrix(w, x, filter);
  std::string emitted = dump_json(gram_json(ns, report));
  CHECK(dump_json(Json::parse(emitted)) == emitted);

  auto found = enumerate_subexpressions(w, x, filter);
  std::string enums = dump_json(enumerate_json(ns, w, x, filter, found));
  CHECK(dump_json(Json::parse(enums)) == enums);

  std::string dem = dump_json(demazure_json(ns, w.letters));
  CHECK(dump_json(Json::parse(dem)) == dem);
  CHECK(dem.find('.') == std::string::npos);  // exact output, no floats
}

TEST_CASE("gram reports serialize expected fields in order") {
  NamedSystem ns = builtin_system("B2");
  Expression w = make_expression(ns.system, parse_word(ns.system, "s t s"));
  GramReport report = gram_matrix(w, ns.system.generator(0), {});
  Json doc = gram_json(ns, report);
  CHECK(doc["system"] == "B2");
  CHECK(doc["entries"][0][0] == "a_s*a_t");
  CHECK(doc["entries"][1][1] == "-1");
  CHECK_FALSE(doc.contains("constant_matrix"));

  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>({"system", "word", "x", "filter", "basis", "entries"}));
}

TEST_CASE("large integers serialize as strings, small as numbers") {
  CHECK(big_json(BigInt(42)).is_number_integer());
  CHECK(big_json(BigInt(-7)).get<long long>() == -7);
  BigInt huge = BigInt(1) << 80;
  CHECK(big_json(huge).is_string());
  CHECK(big_json(huge).get<std::string>() == huge.str());
}

TEST_CASE("bundled examples recompute and pass") {
  for (const auto& name : example_names()) {
    if (name == "s12") continue;  // the long one is covered by the acceptance suite
    ExampleResult res = run_example(name);
    CHECK_MESSAGE(res.pass, name);
    CHECK(res.report["status"] == "PASS");
    std::string emitted = dump_json(res.report);
    CHECK(dump_json(Json::parse(emitted)) == emitted);
  }
}
