#pragma once

// Shared helpers for the test suites: small systems, brute-force
// oracles (naive subexpression enumeration, subword Bruhat order,
// minor-gcd elementary divisors, Laplace determinants), and random
// generators with fixed seeds. The oracles here are deliberately
// independent of the library implementations they check.

#include <algorithm>
#include <random>
#include <vector>

#include "forms.hpp"
#include "hecke.hpp"
#include "nilhecke.hpp"
#include "sysjson.hpp"

namespace nhtest {

using namespace nh;

inline CoxeterSystem make_A2() { return CoxeterSystem::create({"s", "t"}, {{2, -1}, {-1, 2}}); }
inline CoxeterSystem make_B2() { return CoxeterSystem::create({"s", "t"}, {{2, -1}, {-2, 2}}); }
inline CoxeterSystem make_G2() { return CoxeterSystem::create({"s", "t"}, {{2, -1}, {-3, 2}}); }
inline CoxeterSystem make_A1xA1() { return CoxeterSystem::create({"s", "t"}, {{2, 0}, {0, 2}}); }
inline CoxeterSystem make_A1aff() { return CoxeterSystem::create({"s", "t"}, {{2, -2}, {-2, 2}}); }
inline CoxeterSystem make_A3() {
  return CoxeterSystem::create({"s1", "s2", "s3"}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
}
inline CoxeterSystem make_D4() { return builtin_system("D4").system; }

// Closure of {id} under right multiplication; throws if more than cap
// elements appear (guard against accidentally infinite groups).
inline std::vector<Element> full_group(const CoxeterSystem& sys, std::size_t cap = 20000) {
  std::vector<Element> todo{sys.identity()};
  std::vector<Element> all{sys.identity()};
  while (!todo.empty()) {
    Element w = todo.back();
    todo.pop_back();
    for (int s = 0; s < sys.rank(); ++s) {
      Element ws = w.times(s);
      if (std::find(all.begin(), all.end(), ws) == all.end()) {
        all.push_back(ws);
        todo.push_back(ws);
        if (all.size() > cap) fail(ErrorCode::Internal, "group closure exceeded cap");
      }
    }
  }
  return all;
}

// All words of length exactly m over the generators, in lex order.
inline std::vector<std::vector<int>> all_words(int rank, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> word(m, 0);
  for (;;) {
    out.push_back(word);
    int i = m - 1;
    while (i >= 0 && word[i] == rank - 1) word[i--] = 0;
    if (i < 0) break;
    ++word[i];
  }
  if (m == 0) out.assign(1, {});
  return out;
}

// 2^m enumeration, in the same lexicographic order as the library
// (bit 0 before bit 1, leftmost letter most significant).
inline std::vector<DecoratedSubexpression> naive_enumerate(const Expression& w, const Element& x,
                                                           const SubexprFilter& filter = {}) {
  std::vector<DecoratedSubexpression> out;
  const std::size_t m = w.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    Bits bits(m, 0);
    for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> (m - 1 - i)) & 1;
    DecoratedSubexpression d = decorate(w, bits);
    if (d.endpoint != x) continue;
    if (filter.no_d1 && has_D1(d)) continue;
    if (filter.exact_defect && d.defect != *filter.exact_defect) continue;
    if (filter.max_defect && d.defect > *filter.max_defect) continue;
    out.push_back(std::move(d));
  }
  return out;
}

// Bruhat order via the subword property, from one reduced word of w.
inline bool bruhat_leq_subwords(const Element& x, const Element& w) {
  std::vector<int> word = canonical_word(w);
  const std::size_t m = word.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) sub.push_back(word[i]);
    if (x.system().element_from_word(sub) == x) return true;
  }
  return false;
}

// Laplace expansion, independent of the Bareiss routine.
inline BigInt laplace_det(const BigMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    BigMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][j] * laplace_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Elementary divisors via gcds of k x k minors: d_k = g_k / g_{k-1}.
inline std::vector<BigInt> snf_via_minor_gcds(const BigMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t steps = std::min(rows, cols);
  std::vector<BigInt> divisors(steps, 0);
  BigInt prev = 1;
  for (std::size_t k = 1; k <= steps; ++k) {
    BigInt g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i, ci[i] = i;
    auto next_combo = [&](std::vector<std::size_t>& idx, std::size_t bound) {
      std::size_t i = k;
      while (i-- > 0) {
        if (idx[i] + (k - i) <= bound) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    for (;;) {
      BigMatrix sub(k, std::vector<BigInt>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
      g = boost::multiprecision::gcd(g, big_abs(laplace_det(sub)));
      if (!next_combo(ci, cols - 1)) {
        for (std::size_t i = 0; i < k; ++i) ci[i] = i;
        if (!next_combo(ri, rows - 1)) break;
      }
    }
    if (g == 0) break;  // this and all later divisors are zero
    divisors[k - 1] = g / prev;
    prev = g;
  }
  return divisors;
}

inline std::vector<int> random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> pick(0, rank - 1);
  std::vector<int> word(len);
  for (int& s : word) s = pick(rng);
  return word;
}

inline Polynomial random_polynomial(std::mt19937& rng, const CoxeterSystem& sys, int max_terms = 4,
                                    int max_exp = 3, int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  Polynomial f = Polynomial::zero(sys);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Polynomial term = Polynomial::constant(sys, coeff(rng));
    for (int s = 0; s < sys.rank(); ++s) {
      int e = exp(rng);
      for (int j = 0; j < e; ++j) term = term * Polynomial::variable(sys, s);
    }
    f += term;
  }
  return f;
}

inline Polynomial random_linear(std::mt19937& rng, const CoxeterSystem& sys, int max_coeff = 4) {
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<BigInt> c(sys.rank());
  for (auto& v : c) v = coeff(rng);
  return Polynomial::linear(sys, c);
}

// D_{word} * lambda by peeling letters from the right end of the word;
// used to confirm that the pushdown is independent of the reduced word.
inline NHElement pushdown_right_peel(const CoxeterSystem& sys, const std::vector<int>& word,
                                     const Polynomial& lam) {
  if (word.empty()) return nh_one(sys).scaled(lam);
  std::vector<int> prefix(word.begin(), word.end() - 1);
  int s = word.back();
  NHElement head = mul_right_D(pushdown_right_peel(sys, prefix, act(s, lam)), s);
  Polynomial ds = demazure(s, lam);  // an integer for linear lam
  head += nh_basis(sys.element_from_word(prefix)).scaled(ds);
  return head;
}

// Image of an NH element in the delta basis; the completely
// independent route for product identities.
inline DeltaElement to_delta(const NHElement& e) {
  DeltaElement out(e.system());
  for (const auto& [w, f] : e.coeffs()) {
    DeltaElement dw = delta_D_basis(w);
    for (const auto& [v, g] : dw.coeffs()) out.add(v, g.mul_poly(f));
  }
  return out;
}

inline bool delta_equal(const DeltaElement& a, const DeltaElement& b) {
  for (const auto& [w, f] : a.coeffs())
    if (!(f == b.coefficient(w))) return false;
  for (const auto& [w, f] : b.coeffs())
    if (!(f == a.coefficient(w))) return false;
  return true;
}

}  // namespace nhtest
