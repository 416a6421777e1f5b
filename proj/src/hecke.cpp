#include "hecke.hpp"

namespace nh {

LaurentPoly HeckeElement::coefficient(const Element& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Element& w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  if (!sys_.valid()) sys_ = w.system();
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    coeffs_.emplace(w, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [w, p] : other.coeffs_) add(w, p);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& p) const {
  HeckeElement out(sys_);
  for (const auto& [w, q] : coeffs_) out.add(w, p * q);
  return out;
}

HeckeElement hecke_one(const CoxeterSystem& sys) {
  HeckeElement e(sys);
  e.add(sys.identity(), LaurentPoly::constant(1));
  return e;
}

HeckeElement hecke_basis(const Element& w) {
  HeckeElement e(w.system());
  e.add(w, LaurentPoly::constant(1));
  return e;
}

HeckeElement mul_right_Hs(const HeckeElement& e, int s) {
  HeckeElement out(e.system());
  static const LaurentPoly quad = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  for (const auto& [y, p] : e.coeffs()) {
    out.add(y.times(s), p);
    if (y.right_descent(s)) out.add(y, quad * p);
  }
  return out;
}

HeckeElement bott_samelson_product(const Expression& w) {
  HeckeElement e = hecke_one(w.system);
  const LaurentPoly v = LaurentPoly::monomial(1);
  for (int s : w.letters) {
    HeckeElement next = mul_right_Hs(e, s);
    next += e.scaled(v);
    e = std::move(next);
  }
  return e;
}

DeodharReport deodhar_check(const Expression& w) {
  DeodharReport report;
  HeckeElement bs = bott_samelson_product(w);
  report.support_size = bs.coeffs().size();
  BigInt total = 0;
  for (const auto& [x, p] : bs.coeffs()) {
    LaurentPoly gf = defect_generating_function(w, x);
    if (!(gf == p)) {
      report.pass = false;
      report.detail = "coefficient mismatch at x = " +
                      word_to_string(w.system, canonical_word(x)) + ": Hecke " + p.str() +
                      " vs subexpressions " + gf.str();
      return report;
    }
    total += p.evaluate_at_one();
  }
  BigInt expected = BigInt(1) << w.letters.size();
  if (total != expected) {
    report.pass = false;
    report.detail = "support accounts for " + total.str() + " of " + expected.str() +
                    " subexpressions";
  }
  return report;
}

}  // namespace nh
