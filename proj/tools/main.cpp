// nilhecke command line front end. All computation goes through the C
// API of the shared library; this program only parses arguments, loads
// system definitions and renders results.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilhecke.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct SystemHandle {
  nh_system* sys = nullptr;
  ~SystemHandle() { nh_system_free(sys); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { nh_string_free(s); }
};

int report_error(nh_status status) {
  Json err;
  err["error"] = nh_status_name(status);
  err["detail"] = nh_last_error();
  std::cout << err.dump(2) << std::endl;
  return status == NH_ERR_EXAMPLE_MISMATCH ? kExitMismatch : kExitInputError;
}

int load_system(const std::string& source, SystemHandle& handle) {
  std::ifstream in(source);
  if (in.good()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    nh_status st = nh_system_from_json(buf.str().c_str(), &handle.sys);
    return st == NH_OK ? kExitOk : report_error(st);
  }
  nh_status st = nh_system_builtin(source.c_str(), &handle.sys);
  if (st == NH_OK) return kExitOk;
  Json err;
  err["error"] = nh_status_name(st);
  err["detail"] = "'" + source + "' is neither a readable file nor a builtin system";
  std::cout << err.dump(2) << std::endl;
  return kExitInputError;
}

// --format text renderings; JSON is the primary format

std::string join(const Json& word) {
  std::string out;
  for (const auto& w : word) {
    if (!out.empty()) out += ' ';
    out += w.get<std::string>();
  }
  return out;
}

void print_text(const std::string& cmd, const Json& doc) {
  std::ostream& os = std::cout;
  if (cmd == "demazure") {
    os << "word:            " << join(doc["word"]) << "\n";
    os << "demazure product: " << join(doc["demazure_product"]) << "\n";
    os << "length:          " << doc["length"] << "\n";
    return;
  }
  if (cmd == "enumerate") {
    os << "word: " << join(doc["word"]) << "   x: " << join(doc["x"]) << "\n";
    os << "count: " << doc["count"] << "\n";
    for (const auto& d : doc["subexpressions"]) {
      os << "  " << d["bits"].get<std::string>() << "  defect " << d["defect"] << "  ";
      for (const auto& dec : d["decorations"]) os << dec.get<std::string>() << ' ';
      os << "\n";
    }
    return;
  }
  if (cmd == "pair") {
    os << "d = " << doc["d"].get<std::string>() << "\n";
    if (doc.contains("oracle_agrees"))
      os << "oracle: " << (doc["oracle_agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    return;
  }
  if (cmd == "gram") {
    os << "word: " << join(doc["word"]) << "   x: " << join(doc["x"]) << "\n";
    os << "basis:\n";
    for (const auto& d : doc["basis"])
      os << "  " << d["bits"].get<std::string>() << "  defect " << d["defect"] << "\n";
    os << "entries:\n";
    for (const auto& row : doc["entries"]) {
      os << " ";
      for (const auto& entry : row) os << " [" << entry.get<std::string>() << "]";
      os << "\n";
    }
    if (doc.contains("determinant")) os << "determinant: " << doc["determinant"] << "\n";
    if (doc.contains("elementary_divisors"))
      os << "elementary divisors: " << doc["elementary_divisors"].dump() << "\n";
    if (doc.contains("torsion_primes"))
      os << "torsion primes: " << doc["torsion_primes"].dump() << "\n";
    return;
  }
  if (cmd == "deodhar") {
    os << (doc["pass"].get<bool>() ? "pass" : "FAIL") << " (support "
       << doc["support_size"] << ")";
    std::string detail = doc["detail"].get<std::string>();
    if (!detail.empty()) os << ": " << detail;
    os << "\n";
    return;
  }
  if (cmd == "examples") {
    os << doc["example"].get<std::string>() << ": " << doc["status"].get<std::string>() << "\n";
    for (const auto& c : doc["checks"]) {
      os << "  " << (c["ok"].get<bool>() ? "ok  " : "FAIL") << " " << c["name"].get<std::string>();
      if (!c["ok"].get<bool>())
        os << "  expected " << c["expected"] << ", got " << c["got"];
      os << "\n";
    }
    return;
  }
  os << doc.dump(2) << "\n";
}

int emit(const std::string& cmd, const std::string& format, const char* json_text) {
  if (format == "text") {
    print_text(cmd, Json::parse(json_text));
  } else {
    std::cout << json_text << std::endl;
  }
  return kExitOk;
}

unsigned oracle_bound_from_env() {
  const char* env = std::getenv("NILHECKE_ORACLE_BOUND");
  if (!env) return 0;  // library default
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) {
    std::cerr << "warning: ignoring invalid NILHECKE_ORACLE_BOUND '" << env << "'\n";
    return 0;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact light-leaves intersection forms via the nil Hecke ring"};
  app.require_subcommand(1);
  app.fallthrough();  // app options may follow the subcommand

  std::string format = "json";
  app.add_option("--format", format, "Output format: json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string system_arg;
  std::string word, target, bits1, bits2, example_name;
  bool no_d1 = false, with_oracle = false;
  std::optional<long long> defect, max_defect;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_arg,
                    "System definition file or builtin name (A1..A11, B2, G2, D4, A1~)")
        ->required();
  };

  CLI::App* demazure = app.add_subcommand("demazure", "Demazure (star) product of a word");
  add_system(demazure);
  demazure->add_option("word", word, "Word (space- or comma-separated generator names)")
      ->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "Subexpressions with a given endpoint");
  add_system(enumerate);
  enumerate->add_option("word", word)->required();
  enumerate->add_option("x", target, "Target element, as a word")->required();
  enumerate->add_flag("--no-d1", no_d1, "Only subexpressions without D1");
  enumerate->add_option("--defect", defect, "Exact defect");
  enumerate->add_option("--max-defect", max_defect, "Maximum defect");

  CLI::App* pair = app.add_subcommand("pair", "Intersection-form entry d(e1, e2)");
  add_system(pair);
  pair->add_option("word", word)->required();
  pair->add_option("bits1", bits1, "First 01-sequence");
  pair->add_option("bits2", bits2, "Second 01-sequence");
  pair->add_flag("--oracle", with_oracle, "Cross-check against the delta-basis oracle");

  CLI::App* gram = app.add_subcommand("gram", "Gram matrix of no-D1 subexpressions");
  add_system(gram);
  gram->add_option("word", word)->required();
  gram->add_option("x", target, "Target element, as a word")->required();
  gram->add_option("--defect", defect, "Restrict the basis to one exact defect");

  CLI::App* deodhar = app.add_subcommand("deodhar", "Hecke/subexpression cross-check");
  add_system(deodhar);
  deodhar->add_option("word", word)->required();

  CLI::App* examples = app.add_subcommand("examples", "Recompute a bundled worked example");
  examples->add_option("name", example_name, "ks-s8, braden-s8, braden-d4, s12, dihedral-sts")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    Json err;
    err["error"] = "Usage";
    err["detail"] = e.what();
    std::cout << err.dump(2) << std::endl;
    return kExitInputError;
  }

  if (examples->parsed()) {
    OwnedString out;
    nh_status st = nh_example(example_name.c_str(), &out.s);
    if (st == NH_OK || (st == NH_ERR_EXAMPLE_MISMATCH && out.s)) {
      emit("examples", format, out.s);
      return st == NH_OK ? kExitOk : kExitMismatch;
    }
    return report_error(st);
  }

  SystemHandle sys;
  if (int rc = load_system(system_arg, sys); rc != kExitOk) return rc;

  OwnedString out;
  nh_status st = NH_OK;
  std::string cmd;
  if (demazure->parsed()) {
    cmd = "demazure";
    st = nh_demazure(sys.sys, word.c_str(), &out.s);
  } else if (enumerate->parsed()) {
    cmd = "enumerate";
    long long d = defect.value_or(0), md = max_defect.value_or(0);
    st = nh_enumerate(sys.sys, word.c_str(), target.c_str(), no_d1 ? 1 : 0,
                      defect ? &d : nullptr, max_defect ? &md : nullptr, &out.s);
  } else if (pair->parsed()) {
    cmd = "pair";
    st = nh_pair(sys.sys, word.c_str(), bits1.c_str(), bits2.c_str(), with_oracle ? 1 : 0,
                 oracle_bound_from_env(), &out.s);
  } else if (gram->parsed()) {
    cmd = "gram";
    long long d = defect.value_or(0);
    st = nh_gram(sys.sys, word.c_str(), target.c_str(), defect ? &d : nullptr, &out.s);
  } else if (deodhar->parsed()) {
    cmd = "deodhar";
    st = nh_deodhar(sys.sys, word.c_str(), &out.s);
  }

  if (st != NH_OK) return report_error(st);
  return emit(cmd, format, out.s);
}
