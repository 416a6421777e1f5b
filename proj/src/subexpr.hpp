#pragma once

// Expressions (words in the generators), 01-sequences with their U/D
// decorations and defect, the greedy subexpression realizing the
// Demazure product, and pruned enumeration of all subexpressions with
// a prescribed endpoint.

#include <optional>
#include <vector>

#include "coxeter.hpp"
#include "laurent.hpp"

namespace nh {

struct Expression {
  CoxeterSystem system;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
};

Expression make_expression(const CoxeterSystem& sys, std::vector<int> letters);

enum class Decoration : std::uint8_t { U0, U1, D0, D1 };
const char* decoration_name(Decoration d);

using Bits = std::vector<std::uint8_t>;

struct DecoratedSubexpression {
  Bits bits;
  std::vector<Decoration> decorations;
  Element endpoint;
  int defect = 0;
};

// Walks the prefix products w_k of the chosen letters; the i-th letter
// is decorated U when w_{i-1} s_i > w_{i-1} and D otherwise, and the
// defect is #(U0) - #(D0).
DecoratedSubexpression decorate(const Expression& w, const Bits& bits);

// True iff some decoration is D1; equivalently the subword of letters
// with bit 1 is not a reduced expression.
bool has_D1(const DecoratedSubexpression& d);

// The subexpression choosing every ascending letter. Its endpoint is
// the Demazure product of the word, its decorations are all U1/D0, and
// its defect is len(w_*) - m.
DecoratedSubexpression greedy_subexpression(const Expression& w);

struct SubexprFilter {
  bool no_d1 = false;
  std::optional<int> exact_defect;
  std::optional<int> max_defect;
};

// All 01-sequences with endpoint x passing the filter, in lexicographic
// bits order (0 before 1). Depth-first with pruning: a partial state is
// cut when x is not Bruhat-below the Demazure product of the current
// prefix endpoint with the remaining suffix, when the remaining letters
// cannot reach length(x), or when the defect filter is unreachable.
std::vector<DecoratedSubexpression> enumerate_subexpressions(
    const Expression& w, const Element& x, const SubexprFilter& filter = {});

// Sum of v^defect over all subexpressions with endpoint x.
LaurentPoly defect_generating_function(const Expression& w, const Element& x);

}  // namespace nh
