#pragma once

// System definition files, bundled systems, word/bit-string parsing,
// and JSON serialization of computation results. JSON documents use a
// fixed key order and contain no floating point; integers that do not
// fit in 64 bits are emitted as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "forms.hpp"
#include "hecke.hpp"

namespace nh {

using Json = nlohmann::ordered_json;

struct NamedSystem {
  std::string name;
  CoxeterSystem system;
};

// {"name": ..., "generators": [...], "cartan": [[...]],
//  "coxeter_matrix": [[...]] }  -- coxeter_matrix optional, entries
// positive integers or the string "inf".
NamedSystem system_from_json_text(const std::string& text);
NamedSystem system_from_json(const Json& doc);

NamedSystem builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();
bool is_builtin_system(const std::string& name);

// Words are space- or comma-separated generator names.
std::vector<int> parse_word(const CoxeterSystem& sys, const std::string& text);
Bits parse_bits(const std::string& text, std::size_t expected_length);
std::string bits_string(const Bits& bits);

Json word_json(const CoxeterSystem& sys, std::span<const int> word);
Json big_json(const BigInt& v);
Json decorated_json(const DecoratedSubexpression& d);

Json demazure_json(const NamedSystem& ns, std::span<const int> word);
Json enumerate_json(const NamedSystem& ns, const Expression& w, const Element& x,
                    const SubexprFilter& filter,
                    const std::vector<DecoratedSubexpression>& found);
Json pair_json(const NamedSystem& ns, const Expression& w, const Bits& b1, const Bits& b2,
               bool with_oracle, unsigned oracle_bound);
Json gram_json(const NamedSystem& ns, const GramReport& report);
Json deodhar_json(const NamedSystem& ns, const Expression& w, const DeodharReport& report);

std::string dump_json(const Json& doc);

}  // namespace nh
