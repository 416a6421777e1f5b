#include "nilhecke.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "examples.hpp"
#include "sysjson.hpp"

using namespace nh;

struct nh_system {
  NamedSystem named;
};

namespace {

thread_local std::string g_last_error;

nh_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return NH_ERR_PARSE;
    case ErrorCode::DiagonalNotTwo: return NH_ERR_DIAGONAL_NOT_TWO;
    case ErrorCode::PositiveOffDiagonal: return NH_ERR_POSITIVE_OFF_DIAGONAL;
    case ErrorCode::AsymmetricZero: return NH_ERR_ASYMMETRIC_ZERO;
    case ErrorCode::OrderMismatch: return NH_ERR_ORDER_MISMATCH;
    case ErrorCode::BadGenerator: return NH_ERR_BAD_GENERATOR;
    case ErrorCode::LengthMismatch: return NH_ERR_LENGTH_MISMATCH;
    case ErrorCode::EndpointMismatch: return NH_ERR_ENDPOINT_MISMATCH;
    case ErrorCode::HasD1: return NH_ERR_HAS_D1;
    case ErrorCode::NotLinear: return NH_ERR_NOT_LINEAR;
    case ErrorCode::InexactDivision: return NH_ERR_INEXACT_DIVISION;
    case ErrorCode::OracleBoundExceeded: return NH_ERR_ORACLE_BOUND_EXCEEDED;
    case ErrorCode::NonConstantEntries: return NH_ERR_NON_CONSTANT_ENTRIES;
    case ErrorCode::SystemMismatch: return NH_ERR_SYSTEM_MISMATCH;
    case ErrorCode::Overflow: return NH_ERR_OVERFLOW;
    case ErrorCode::InvalidArgument: return NH_ERR_INVALID_ARGUMENT;
    case ErrorCode::ExampleMismatch: return NH_ERR_EXAMPLE_MISMATCH;
    case ErrorCode::Internal: return NH_ERR_INTERNAL;
  }
  return NH_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
nh_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NH_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NH_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NH_ERR_INTERNAL;
  }
}

nh_status require(bool ok, const char* what) {
  if (ok) return NH_OK;
  g_last_error = what;
  return NH_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* nh_status_name(nh_status status) {
  switch (status) {
    case NH_OK: return "Ok";
    case NH_ERR_PARSE: return error_code_name(ErrorCode::Parse);
    case NH_ERR_DIAGONAL_NOT_TWO: return error_code_name(ErrorCode::DiagonalNotTwo);
    case NH_ERR_POSITIVE_OFF_DIAGONAL: return error_code_name(ErrorCode::PositiveOffDiagonal);
    case NH_ERR_ASYMMETRIC_ZERO: return error_code_name(ErrorCode::AsymmetricZero);
    case NH_ERR_ORDER_MISMATCH: return error_code_name(ErrorCode::OrderMismatch);
    case NH_ERR_BAD_GENERATOR: return error_code_name(ErrorCode::BadGenerator);
    case NH_ERR_LENGTH_MISMATCH: return error_code_name(ErrorCode::LengthMismatch);
    case NH_ERR_ENDPOINT_MISMATCH: return error_code_name(ErrorCode::EndpointMismatch);
    case NH_ERR_HAS_D1: return error_code_name(ErrorCode::HasD1);
    case NH_ERR_NOT_LINEAR: return error_code_name(ErrorCode::NotLinear);
    case NH_ERR_INEXACT_DIVISION: return error_code_name(ErrorCode::InexactDivision);
    case NH_ERR_ORACLE_BOUND_EXCEEDED: return error_code_name(ErrorCode::OracleBoundExceeded);
    case NH_ERR_NON_CONSTANT_ENTRIES: return error_code_name(ErrorCode::NonConstantEntries);
    case NH_ERR_SYSTEM_MISMATCH: return error_code_name(ErrorCode::SystemMismatch);
    case NH_ERR_OVERFLOW: return error_code_name(ErrorCode::Overflow);
    case NH_ERR_INVALID_ARGUMENT: return error_code_name(ErrorCode::InvalidArgument);
    case NH_ERR_EXAMPLE_MISMATCH: return error_code_name(ErrorCode::ExampleMismatch);
    case NH_ERR_INTERNAL: return error_code_name(ErrorCode::Internal);
  }
  return "Unknown";
}

const char* nh_last_error(void) { return g_last_error.c_str(); }

void nh_string_free(char* s) { std::free(s); }

nh_status nh_system_from_json(const char* json_text, nh_system** out) {
  if (nh_status st = require(json_text && out, "null argument"); st != NH_OK) return st;
  return guarded([&] { *out = new nh_system{system_from_json_text(json_text)}; });
}

nh_status nh_system_builtin(const char* name, nh_system** out) {
  if (nh_status st = require(name && out, "null argument"); st != NH_OK) return st;
  return guarded([&] { *out = new nh_system{builtin_system(name)}; });
}

nh_status nh_builtin_names(char** out_json) {
  if (nh_status st = require(out_json != nullptr, "null argument"); st != NH_OK) return st;
  return guarded([&] {
    Json arr = Json::array();
    for (const auto& n : builtin_system_names()) arr.push_back(n);
    *out_json = dup_string(dump_json(arr));
  });
}

void nh_system_free(nh_system* sys) { delete sys; }

int nh_system_rank(const nh_system* sys) { return sys ? sys->named.system.rank() : 0; }

nh_status nh_demazure(const nh_system* sys, const char* word, char** out_json) {
  if (nh_status st = require(sys && word && out_json, "null argument"); st != NH_OK) return st;
  return guarded([&] {
    std::vector<int> letters = parse_word(sys->named.system, word);
    *out_json = dup_string(dump_json(demazure_json(sys->named, letters)));
  });
}

nh_status nh_enumerate(const nh_system* sys, const char* word, const char* target, int no_d1,
                       const long long* defect, const long long* max_defect, char** out_json) {
  if (nh_status st = require(sys && word && target && out_json, "null argument"); st != NH_OK)
    return st;
  return guarded([&] {
    const CoxeterSystem& cs = sys->named.system;
    Expression w = make_expression(cs, parse_word(cs, word));
    Element x = cs.element_from_word(parse_word(cs, target));
    SubexprFilter filter;
    filter.no_d1 = no_d1 != 0;
    if (defect) filter.exact_defect = static_cast<int>(*defect);
    if (max_defect) filter.max_defect = static_cast<int>(*max_defect);
    auto found = enumerate_subexpressions(w, x, filter);
    *out_json = dup_string(dump_json(enumerate_json(sys->named, w, x, filter, found)));
  });
}

nh_status nh_pair(const nh_system* sys, const char* word, const char* bits1, const char* bits2,
                  int with_oracle, unsigned oracle_bound, char** out_json) {
  if (nh_status st = require(sys && word && bits1 && bits2 && out_json, "null argument");
      st != NH_OK)
    return st;
  return guarded([&] {
    const CoxeterSystem& cs = sys->named.system;
    Expression w = make_expression(cs, parse_word(cs, word));
    Bits b1 = parse_bits(bits1, w.size());
    Bits b2 = parse_bits(bits2, w.size());
    if (oracle_bound == 0) oracle_bound = kDefaultOracleBound;
    *out_json = dup_string(
        dump_json(pair_json(sys->named, w, b1, b2, with_oracle != 0, oracle_bound)));
  });
}

nh_status nh_gram(const nh_system* sys, const char* word, const char* target,
                  const long long* defect, char** out_json) {
  if (nh_status st = require(sys && word && target && out_json, "null argument"); st != NH_OK)
    return st;
  return guarded([&] {
    const CoxeterSystem& cs = sys->named.system;
    Expression w = make_expression(cs, parse_word(cs, word));
    Element x = cs.element_from_word(parse_word(cs, target));
    SubexprFilter filter;
    filter.no_d1 = true;
    if (defect) filter.exact_defect = static_cast<int>(*defect);
    GramReport report = gram_matrix(w, x, filter);
    *out_json = dup_string(dump_json(gram_json(sys->named, report)));
  });
}

nh_status nh_deodhar(const nh_system* sys, const char* word, char** out_json) {
  if (nh_status st = require(sys && word && out_json, "null argument"); st != NH_OK) return st;
  return guarded([&] {
    const CoxeterSystem& cs = sys->named.system;
    Expression w = make_expression(cs, parse_word(cs, word));
    DeodharReport report = deodhar_check(w);
    *out_json = dup_string(dump_json(deodhar_json(sys->named, w, report)));
  });
}

nh_status nh_example(const char* name, char** out_json) {
  if (nh_status st = require(name && out_json, "null argument"); st != NH_OK) return st;
  bool pass = false;
  nh_status st = guarded([&] {
    ExampleResult res = run_example(name);
    pass = res.pass;
    *out_json = dup_string(dump_json(res.report));
  });
  if (st != NH_OK) return st;
  if (!pass) {
    g_last_error = "recomputed values differ from the stored expected values";
    return NH_ERR_EXAMPLE_MISMATCH;
  }
  return NH_OK;
}

nh_status nh_example_names(char** out_json) {
  if (nh_status st = require(out_json != nullptr, "null argument"); st != NH_OK) return st;
  return guarded([&] {
    Json arr = Json::array();
    for (const auto& n : example_names()) arr.push_back(n);
    *out_json = dup_string(dump_json(arr));
  });
}

}  // extern "C"
