#include "sysjson.hpp"

#include <algorithm>
#include <sstream>

namespace nh {

namespace {

std::vector<std::string> an_names(int n) {
  static const char* tail[] = {"sa", "sb"};
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    if (i <= 9)
      names.push_back("s" + std::to_string(i));
    else
      names.push_back(tail[i - 10]);
  }
  return names;
}

std::vector<std::vector<Int>> an_cartan(int n) {
  std::vector<std::vector<Int>> c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  }
  return c;
}

}  // namespace

std::vector<std::string> builtin_system_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 11; ++n) names.push_back("A" + std::to_string(n));
  names.push_back("B2");
  names.push_back("G2");
  names.push_back("D4");
  names.push_back("A1~");
  return names;
}

bool is_builtin_system(const std::string& name) {
  auto names = builtin_system_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

NamedSystem builtin_system(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'A' && name != "A1~") {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      n = 0;
    }
    if (n >= 1 && n <= 11 && name == "A" + std::to_string(n))
      return {name, CoxeterSystem::create(an_names(n), an_cartan(n))};
  }
  if (name == "B2")
    return {name, CoxeterSystem::create({"s", "t"}, {{2, -1}, {-2, 2}})};
  if (name == "G2")
    return {name, CoxeterSystem::create({"s", "t"}, {{2, -1}, {-3, 2}})};
  if (name == "A1~")
    return {name, CoxeterSystem::create({"s", "t"}, {{2, -2}, {-2, 2}})};
  if (name == "D4") {
    // t is the central node; s, u, v commute pairwise
    std::vector<std::vector<Int>> c = {
        {2, -1, 0, 0},
        {-1, 2, -1, -1},
        {0, -1, 2, 0},
        {0, -1, 0, 2},
    };
    return {name, CoxeterSystem::create({"s", "t", "u", "v"}, c)};
  }
  fail(ErrorCode::Parse, "unknown builtin system '" + name + "'");
}

NamedSystem system_from_json_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(doc);
}

NamedSystem system_from_json(const Json& doc) {
  if (!doc.is_object()) fail(ErrorCode::Parse, "system file must be a JSON object");
  if (!doc.contains("cartan")) fail(ErrorCode::Parse, "system file is missing 'cartan'");
  std::string name = doc.value("name", std::string("unnamed"));

  std::vector<std::string> generators;
  if (doc.contains("generators")) {
    if (!doc["generators"].is_array()) fail(ErrorCode::Parse, "'generators' must be an array");
    for (const auto& g : doc["generators"]) {
      if (!g.is_string()) fail(ErrorCode::Parse, "generator names must be strings");
      generators.push_back(g.get<std::string>());
    }
  }

  std::vector<std::vector<Int>> cartan;
  if (!doc["cartan"].is_array()) fail(ErrorCode::Parse, "'cartan' must be an array of rows");
  for (const auto& row : doc["cartan"]) {
    if (!row.is_array()) fail(ErrorCode::Parse, "'cartan' rows must be arrays");
    std::vector<Int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(ErrorCode::Parse, "'cartan' entries must be integers");
      r.push_back(v.get<Int>());
    }
    cartan.push_back(std::move(r));
  }

  std::optional<std::vector<std::vector<unsigned>>> cox;
  if (doc.contains("coxeter_matrix")) {
    if (!doc["coxeter_matrix"].is_array())
      fail(ErrorCode::Parse, "'coxeter_matrix' must be an array of rows");
    std::vector<std::vector<unsigned>> m;
    for (const auto& row : doc["coxeter_matrix"]) {
      if (!row.is_array()) fail(ErrorCode::Parse, "'coxeter_matrix' rows must be arrays");
      std::vector<unsigned> r;
      for (const auto& v : row) {
        if (v.is_string()) {
          if (v.get<std::string>() != "inf")
            fail(ErrorCode::Parse, "'coxeter_matrix' string entries must be \"inf\"");
          r.push_back(kInfiniteOrder);
        } else if (v.is_number_integer() && v.get<long long>() >= 1) {
          r.push_back(static_cast<unsigned>(v.get<long long>()));
        } else {
          fail(ErrorCode::Parse, "'coxeter_matrix' entries must be integers >= 1 or \"inf\"");
        }
      }
      m.push_back(std::move(r));
    }
    cox = std::move(m);
  }

  return {name, CoxeterSystem::create(std::move(generators), cartan, cox)};
}

std::vector<int> parse_word(const CoxeterSystem& sys, const std::string& text) {
  std::vector<int> word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int s = sys.generator_index(token);
    if (s < 0) fail(ErrorCode::BadGenerator, "unknown generator '" + token + "'");
    word.push_back(s);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return word;
}

Bits parse_bits(const std::string& text, std::size_t expected_length) {
  Bits bits;
  for (char c : text) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else
      fail(ErrorCode::Parse, std::string("invalid character '") + c + "' in bit string");
  }
  if (bits.size() != expected_length)
    fail(ErrorCode::LengthMismatch, "bit string length " + std::to_string(bits.size()) +
                                        " does not match word length " +
                                        std::to_string(expected_length));
  return bits;
}

Json word_json(const CoxeterSystem& sys, std::span<const int> word) {
  Json arr = Json::array();
  for (int s : word) arr.push_back(sys.generator_name(s));
  return arr;
}

Json big_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

std::string bits_string(const Bits& bits) {
  std::string s;
  for (auto b : bits) s += (b ? '1' : '0');
  return s;
}

Json decorated_json(const DecoratedSubexpression& d) {
  Json doc = Json::object();
  doc["bits"] = bits_string(d.bits);
  Json dec = Json::array();
  for (Decoration x : d.decorations) dec.push_back(decoration_name(x));
  doc["decorations"] = dec;
  doc["defect"] = d.defect;
  return doc;
}

namespace {

Json filter_json(const SubexprFilter& filter) {
  Json f = Json::object();
  f["no_d1"] = filter.no_d1;
  if (filter.exact_defect) f["defect"] = *filter.exact_defect;
  if (filter.max_defect) f["max_defect"] = *filter.max_defect;
  return f;
}

}  // namespace

Json demazure_json(const NamedSystem& ns, std::span<const int> word) {
  Element star = ns.system.demazure_product(word);
  std::vector<int> cw = canonical_word(star);
  Json doc = Json::object();
  doc["system"] = ns.name;
  doc["word"] = word_json(ns.system, word);
  doc["demazure_product"] = word_json(ns.system, cw);
  doc["length"] = star.length();
  return doc;
}

Json enumerate_json(const NamedSystem& ns, const Expression& w, const Element& x,
                    const SubexprFilter& filter,
                    const std::vector<DecoratedSubexpression>& found) {
  Json doc = Json::object();
  doc["system"] = ns.name;
  doc["word"] = word_json(ns.system, w.letters);
  doc["x"] = word_json(ns.system, canonical_word(x));
  doc["filter"] = filter_json(filter);
  doc["count"] = found.size();
  Json arr = Json::array();
  for (const auto& d : found) arr.push_back(decorated_json(d));
  doc["subexpressions"] = arr;
  return doc;
}

Json pair_json(const NamedSystem& ns, const Expression& w, const Bits& b1, const Bits& b2,
               bool with_oracle, unsigned oracle_bound) {
  DecoratedSubexpression d1 = decorate(w, b1);
  DecoratedSubexpression d2 = decorate(w, b2);
  Polynomial d = d_coefficient(w, b1, b2);
  Json doc = Json::object();
  doc["system"] = ns.name;
  doc["word"] = word_json(ns.system, w.letters);
  doc["bits1"] = bits_string(b1);
  doc["bits2"] = bits_string(b2);
  doc["endpoint"] = word_json(ns.system, canonical_word(d1.endpoint));
  doc["defect1"] = d1.defect;
  doc["defect2"] = d2.defect;
  doc["d"] = d.str();
  if (with_oracle) {
    RationalFunction oracle = oracle_delta_d(w, b1, b2, oracle_bound);
    doc["oracle_checked"] = true;
    doc["oracle_agrees"] = oracle.equals_poly(d);
  }
  return doc;
}

Json gram_json(const NamedSystem& ns, const GramReport& report) {
  Json doc = Json::object();
  doc["system"] = ns.name;
  doc["word"] = word_json(ns.system, report.word.letters);
  doc["x"] = word_json(ns.system, canonical_word(report.x));
  doc["filter"] = filter_json(report.filter);
  Json basis = Json::array();
  for (const auto& d : report.basis) basis.push_back(decorated_json(d));
  doc["basis"] = basis;
  Json entries = Json::array();
  for (const auto& row : report.entries) {
    Json r = Json::array();
    for (const auto& entry : row) r.push_back(entry.str());
    entries.push_back(r);
  }
  doc["entries"] = entries;
  if (report.constant_matrix) {
    Json m = Json::array();
    for (const auto& row : *report.constant_matrix) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(big_json(v));
      m.push_back(r);
    }
    doc["constant_matrix"] = m;
  }
  if (report.determinant) doc["determinant"] = big_json(*report.determinant);
  if (report.elementary_divisors) {
    Json arr = Json::array();
    for (const auto& v : *report.elementary_divisors) arr.push_back(big_json(v));
    doc["elementary_divisors"] = arr;
  }
  if (report.torsion_primes) {
    Json arr = Json::array();
    for (const auto& v : *report.torsion_primes) arr.push_back(big_json(v));
    doc["torsion_primes"] = arr;
  }
  return doc;
}

Json deodhar_json(const NamedSystem& ns, const Expression& w, const DeodharReport& report) {
  Json doc = Json::object();
  doc["system"] = ns.name;
  doc["word"] = word_json(ns.system, w.letters);
  doc["pass"] = report.pass;
  doc["support_size"] = report.support_size;
  doc["detail"] = report.detail;
  return doc;
}

std::string dump_json(const Json& doc) { return doc.dump(2); }

}  // namespace nh
