#include "subexpr.hpp"

#include <algorithm>

namespace nh {

Expression make_expression(const CoxeterSystem& sys, std::vector<int> letters) {
  if (!sys.valid()) fail(ErrorCode::InvalidArgument, "uninitialized system");
  for (int s : letters)
    if (s < 0 || s >= sys.rank())
      fail(ErrorCode::BadGenerator, "letter index " + std::to_string(s) + " out of range");
  return Expression{sys, std::move(letters)};
}

const char* decoration_name(Decoration d) {
  switch (d) {
    case Decoration::U0: return "U0";
    case Decoration::U1: return "U1";
    case Decoration::D0: return "D0";
    case Decoration::D1: return "D1";
  }
  return "?";
}

DecoratedSubexpression decorate(const Expression& w, const Bits& bits) {
  if (bits.size() != w.letters.size())
    fail(ErrorCode::LengthMismatch, "bit sequence length does not match expression length");
  DecoratedSubexpression out;
  out.bits = bits;
  out.decorations.reserve(bits.size());
  Element cur = w.system.identity();
  int defect = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    int s = w.letters[i];
    bool up = !cur.right_descent(s);
    bool taken = bits[i] != 0;
    Decoration d = up ? (taken ? Decoration::U1 : Decoration::U0)
                      : (taken ? Decoration::D1 : Decoration::D0);
    if (d == Decoration::U0) ++defect;
    if (d == Decoration::D0) --defect;
    out.decorations.push_back(d);
    if (taken) cur = cur.times(s);
  }
  out.endpoint = cur;
  out.defect = defect;
  return out;
}

bool has_D1(const DecoratedSubexpression& d) {
  return std::find(d.decorations.begin(), d.decorations.end(), Decoration::D1) !=
         d.decorations.end();
}

DecoratedSubexpression greedy_subexpression(const Expression& w) {
  Bits bits(w.letters.size(), 0);
  Element cur = w.system.identity();
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int s = w.letters[i];
    if (!cur.right_descent(s)) {
      bits[i] = 1;
      cur = cur.times(s);
    }
  }
  return decorate(w, bits);
}

std::vector<DecoratedSubexpression> enumerate_subexpressions(
    const Expression& w, const Element& x, const SubexprFilter& filter) {
  if (!x.system().same_system(w.system))
    fail(ErrorCode::SystemMismatch, "endpoint belongs to a different system");
  const int m = static_cast<int>(w.letters.size());
  const unsigned target_len = x.length();

  // Suffix Demazure products, right to left: suffix_star[i] = (s_i * ... * s_{m-1}),
  // stored as canonical words so folding them onto a prefix is cheap.
  std::vector<Element> suffix_star(m + 1);
  std::vector<std::vector<int>> suffix_star_word(m + 1);
  suffix_star[m] = w.system.identity();
  for (int i = m - 1; i >= 0; --i) {
    Element next = suffix_star[i + 1];
    Element lifted = next.pre_times(w.letters[i]);
    suffix_star[i] = (lifted.length() > next.length()) ? lifted : next;
  }
  for (int i = 0; i <= m; ++i) suffix_star_word[i] = canonical_word(suffix_star[i]);

  std::vector<DecoratedSubexpression> out;
  Bits bits(m, 0);
  std::vector<Decoration> decorations(m, Decoration::U0);

  auto reach_bound = [&](const Element& cur, int i) {
    Element acc = cur;
    for (int s : suffix_star_word[i]) acc = demazure_star(acc, s);
    return acc;
  };

  auto rec = [&](auto&& self, int i, const Element& cur, int defect) -> void {
    int remaining = m - i;
    if (target_len > cur.length() + static_cast<unsigned>(remaining)) return;
    if (filter.exact_defect &&
        (defect + remaining < *filter.exact_defect || defect - remaining > *filter.exact_defect))
      return;
    if (filter.max_defect && defect - remaining > *filter.max_defect) return;
    if (!bruhat_leq(x, reach_bound(cur, i))) return;
    if (i == m) {
      if (cur != x) return;  // the defect filters were already decisive at remaining = 0
      DecoratedSubexpression d;
      d.bits = bits;
      d.decorations = decorations;
      d.endpoint = cur;
      d.defect = defect;
      out.push_back(std::move(d));
      return;
    }
    int s = w.letters[i];
    bool up = !cur.right_descent(s);
    // bit 0 first: lexicographic output order
    bits[i] = 0;
    decorations[i] = up ? Decoration::U0 : Decoration::D0;
    self(self, i + 1, cur, defect + (up ? 1 : -1));
    if (up || !filter.no_d1) {  // taking a descending letter creates a D1
      bits[i] = 1;
      decorations[i] = up ? Decoration::U1 : Decoration::D1;
      self(self, i + 1, cur.times(s), defect);
    }
    bits[i] = 0;
    decorations[i] = Decoration::U0;
  };
  rec(rec, 0, w.system.identity(), 0);
  return out;
}

LaurentPoly defect_generating_function(const Expression& w, const Element& x) {
  LaurentPoly gf;
  for (const auto& d : enumerate_subexpressions(w, x))
    gf.add_term(d.defect, 1);
  return gf;
}

}  // namespace nh
