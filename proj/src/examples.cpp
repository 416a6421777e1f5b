#include "examples.hpp"

#include <algorithm>

namespace nh {

namespace {

struct Checker {
  Json checks = Json::array();
  bool pass = true;

  void expect(const std::string& name, const std::string& expected, const std::string& got) {
    bool ok = expected == got;
    pass = pass && ok;
    Json c = Json::object();
    c["name"] = name;
    c["expected"] = expected;
    c["got"] = got;
    c["ok"] = ok;
    checks.push_back(c);
  }
};

ExampleResult finish(const std::string& name, Checker& ck) {
  ExampleResult res;
  res.pass = ck.pass;
  res.report = Json::object();
  res.report["example"] = name;
  res.report["status"] = ck.pass ? "PASS" : "FAIL";
  res.report["checks"] = ck.checks;
  return res;
}

// d(e, e) examples of the form "the pairing of e with itself is 2".
ExampleResult diagonal_two(const std::string& name, const std::string& system_name,
                           const std::string& word_text, const std::string& bits_text,
                           const std::string& x_text) {
  NamedSystem ns = builtin_system(system_name);
  Expression w = make_expression(ns.system, parse_word(ns.system, word_text));
  Bits bits = parse_bits(bits_text, w.size());
  Checker ck;

  DecoratedSubexpression d = decorate(w, bits);
  Element x = ns.system.element_from_word(parse_word(ns.system, x_text));
  ck.expect("endpoint", word_to_string(ns.system, canonical_word(x)),
            word_to_string(ns.system, canonical_word(d.endpoint)));
  ck.expect("defect", "0", std::to_string(d.defect));
  ck.expect("no_d1", "true", has_D1(d) ? "false" : "true");
  Polynomial dd = d_coefficient(w, bits, bits);
  ck.expect("d", "2", dd.str());
  SubexprFilter defect_zero;
  defect_zero.exact_defect = 0;
  auto found = enumerate_subexpressions(w, x, defect_zero);
  ck.expect("defect_zero_count", "1", std::to_string(found.size()));
  return finish(name, ck);
}

std::string matrix_string(const std::vector<std::vector<std::string>>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += (i ? ", [" : "[");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ", ";
      out += rows[i][j];
    }
    out += "]";
  }
  return out + "]";
}

ExampleResult braden_d4() {
  NamedSystem ns = builtin_system("D4");
  Expression w = make_expression(ns.system, parse_word(ns.system, "s u v t s u v"));
  Element x = ns.system.element_from_word(parse_word(ns.system, "s u v"));
  Checker ck;

  SubexprFilter filter;
  filter.exact_defect = 0;
  GramReport report = gram_matrix(w, x, filter);
  ck.expect("basis_size", "3", std::to_string(report.basis.size()));
  std::string bits;
  for (const auto& d : report.basis) {
    if (!bits.empty()) bits += " ";
    bits += bits_string(d.bits);
  }
  ck.expect("basis_bits", "0110100 1010010 1100001", bits);

  std::vector<std::vector<std::string>> got;
  for (const auto& row : report.entries) {
    std::vector<std::string> r;
    for (const auto& entry : row) r.push_back(entry.str());
    got.push_back(r);
  }
  ck.expect("gram_matrix", "[[0, -1, -1], [-1, 0, -1], [-1, -1, 0]]", matrix_string(got));
  ck.expect("determinant", "-2", report.determinant ? report.determinant->str() : "absent");
  std::string div;
  if (report.elementary_divisors)
    for (const auto& d : *report.elementary_divisors) div += (div.empty() ? "" : " ") + d.str();
  ck.expect("elementary_divisors", "1 1 2", div);
  std::string tor;
  if (report.torsion_primes)
    for (const auto& p : *report.torsion_primes) tor += (tor.empty() ? "" : " ") + p.str();
  ck.expect("torsion_primes", "2", tor);

  // the two pairings spelled out for this word
  Bits e1 = parse_bits("0110100", 7), e2 = parse_bits("1010010", 7);
  ck.expect("pair_e1_e1", "0", d_coefficient(w, e1, e1).str());
  ck.expect("pair_e1_e2", "-1", d_coefficient(w, e1, e2).str());
  return finish("braden-d4", ck);
}

void dihedral_case(Checker& ck, const std::string& system_name, const std::string& word_text) {
  NamedSystem ns = builtin_system(system_name);
  std::vector<int> letters = parse_word(ns.system, word_text);
  Expression w = make_expression(ns.system, letters);
  int s = letters[0], t = letters[1];
  Element x = ns.system.generator(s);
  std::string tag = system_name + "(" + word_text + ")";

  GramReport report = gram_matrix(w, x, {});
  ck.expect(tag + ":basis_bits",
            "001 100",
            report.basis.size() == 2
                ? bits_string(report.basis[0].bits) + " " + bits_string(report.basis[1].bits)
                : "unexpected basis of size " + std::to_string(report.basis.size()));
  if (report.basis.size() != 2) return;

  // lexicographic basis order is [001, 100]; the classical display
  // [[<a_t, a_s^vee>, a_t], [a_t, a_s a_t]] lists 100 first
  Polynomial pairing_c = Polynomial::constant(ns.system, BigInt(ns.system.cartan(s, t)));
  Polynomial a_s = Polynomial::variable(ns.system, s);
  Polynomial a_t = Polynomial::variable(ns.system, t);
  ck.expect(tag + ":entry(100,100)", pairing_c.str(), report.entries[1][1].str());
  ck.expect(tag + ":entry(100,001)", a_t.str(), report.entries[1][0].str());
  ck.expect(tag + ":entry(001,001)", (a_s * a_t).str(), report.entries[0][0].str());
}

ExampleResult dihedral_sts() {
  Checker ck;
  dihedral_case(ck, "A2", "s1 s2 s1");
  dihedral_case(ck, "B2", "s t s");
  dihedral_case(ck, "B2", "t s t");
  dihedral_case(ck, "G2", "s t s");
  dihedral_case(ck, "G2", "t s t");
  dihedral_case(ck, "A1~", "s t s");
  return finish("dihedral-sts", ck);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"ks-s8", "braden-s8", "braden-d4", "s12", "dihedral-sts"};
}

ExampleResult run_example(const std::string& name) {
  if (name == "ks-s8")
    return diagonal_two("ks-s8", "A7", "s1 s3 s2 s4 s3 s5 s4 s3 s2 s1 s6 s7 s6 s5 s4 s3",
                        "1101111100010000", "s1 s3 s4 s3 s5 s4 s3 s7");
  if (name == "braden-s8")
    return diagonal_two("braden-s8", "A7", "s3 s2 s1 s5 s4 s3 s2 s6 s5 s4 s3 s7 s6 s5",
                        "11010101100000", "s2 s3 s2 s5 s6 s5");
  if (name == "s12")
    return diagonal_two(
        "s12", "A11",
        "s1 s2 s1 s3 s2 s1 s5 s4 s6 s5 s4 s3 s7 s6 s5 s4 s3 s8 s7 s9 s8 s7 s6 s5 sa sb sa s9 s8 s7",
        "111111101111111111111100010000",
        "s1 s2 s1 s3 s2 s1 s5 s6 s5 s4 s3 s7 s6 s5 s4 s3 s8 s7 s9 s8 s7 sb");
  if (name == "braden-d4") return braden_d4();
  if (name == "dihedral-sts") return dihedral_sts();
  fail(ErrorCode::Parse, "unknown example '" + name + "'");
}

}  // namespace nh
