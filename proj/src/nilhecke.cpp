#include "nilhecke.hpp"

#include <algorithm>
#include <sstream>

namespace nh {

Polynomial NHElement::coefficient(const Element& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Polynomial::zero(sys_) : it->second;
}

std::vector<Element> NHElement::support() const {
  std::vector<Element> out;
  out.reserve(coeffs_.size());
  for (const auto& [w, f] : coeffs_) out.push_back(w);
  return out;
}

void NHElement::add(const Element& w, const Polynomial& f) {
  if (f.is_zero()) return;
  if (!sys_.valid()) sys_ = w.system();
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    coeffs_.emplace(w, f);
  } else {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NHElement& NHElement::operator+=(const NHElement& other) {
  for (const auto& [w, f] : other.coeffs_) add(w, f);
  return *this;
}

NHElement NHElement::scaled(const Polynomial& f) const {
  NHElement out(sys_);
  if (f.is_zero()) return out;
  for (const auto& [w, g] : coeffs_) out.add(w, f * g);
  return out;
}

bool NHElement::operator==(const NHElement& other) const {
  return coeffs_ == other.coeffs_;
}

NHElement nh_one(const CoxeterSystem& sys) {
  NHElement e(sys);
  e.add(sys.identity(), Polynomial::constant(sys, 1));
  return e;
}

NHElement nh_basis(const Element& w) {
  NHElement e(w.system());
  e.add(w, Polynomial::constant(w.system(), 1));
  return e;
}

NHElement mul_right_D(const NHElement& e, int s) {
  NHElement out(e.system());
  for (const auto& [w, f] : e.coeffs()) {
    if (w.right_descent(s)) continue;  // D_w D_s = 0 when ws < w
    out.add(w.times(s), f);
  }
  return out;
}

NHElement mul_left_D(int s, const NHElement& e) {
  NHElement out(e.system());
  for (const auto& [w, f] : e.coeffs()) {
    if (!w.left_descent(s)) out.add(w.pre_times(s), act(s, f));
    out.add(w, demazure(s, f));
  }
  return out;
}

namespace {

// Cache of D_w * lambda for a fixed linear form lambda; shared across
// the factors of one product evaluation.
struct PushdownCache {
  std::map<std::vector<BigInt>, std::map<Element, NHElement>> memo;
};

// D_w * lambda = (w lambda) D_w + integer combination of D_v with
// l(v) = l(w) - 1. Peels the first letter of the canonical word, so
// subresults are shared between elements with a common tail.
const NHElement& pushdown(const Element& w, const std::vector<BigInt>& lam,
                          const CoxeterSystem& sys, PushdownCache& cache) {
  auto& slot = cache.memo[lam];
  auto it = slot.find(w);
  if (it != slot.end()) return it->second;
  NHElement res(sys);
  if (w.is_identity()) {
    res.add(w, Polynomial::linear(sys, lam));
  } else {
    int rank = sys.rank();
    int s = 0;
    while (s < rank && !w.left_descent(s)) ++s;
    const NHElement& sub = pushdown(w.pre_times(s), lam, sys, cache);
    res = mul_left_D(s, sub);
  }
  return slot.emplace(w, std::move(res)).first->second;
}

NHElement mul_right_linear_cached(const NHElement& e, const std::vector<BigInt>& lam,
                                  PushdownCache& cache) {
  NHElement out(e.system());
  for (const auto& [w, f] : e.coeffs())
    out += pushdown(w, lam, e.system(), cache).scaled(f);
  return out;
}

NHElement mul_right_poly_cached(const NHElement& e, const Polynomial& f, PushdownCache& cache) {
  const CoxeterSystem& sys = e.system();
  if (!sys.same_system(f.system()))
    fail(ErrorCode::SystemMismatch, "polynomial over a different system");
  NHElement out(sys);
  const int n = sys.rank();
  for (const auto& [mono, c] : f.terms()) {
    NHElement chain = e;
    for (int s = 0; s < n; ++s) {
      if (mono[s] == 0) continue;
      std::vector<BigInt> unit(n, 0);
      unit[s] = 1;
      for (unsigned k = 0; k < mono[s]; ++k)
        chain = mul_right_linear_cached(chain, unit, cache);
    }
    out += chain.scaled(Polynomial::constant(sys, c));
  }
  return out;
}

}  // namespace

NHElement mul_right_linear(const NHElement& e, const Polynomial& lin) {
  if (!e.system().same_system(lin.system()))
    fail(ErrorCode::SystemMismatch, "linear form over a different system");
  std::vector<BigInt> lam = lin.linear_coefficients();  // NotLinear on failure
  PushdownCache cache;
  return mul_right_linear_cached(e, lam, cache);
}

NHElement mul_right_poly(const NHElement& e, const Polynomial& f) {
  PushdownCache cache;
  return mul_right_poly_cached(e, f, cache);
}

namespace {

enum class FactorKind { Root, Skip, D };

std::vector<FactorKind> factor_kinds(const Expression& w, const DecoratedSubexpression& d1,
                                     const DecoratedSubexpression& d2) {
  std::vector<FactorKind> kinds(w.letters.size());
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    bool u0a = d1.decorations[i] == Decoration::U0;
    bool u0b = d2.decorations[i] == Decoration::U0;
    kinds[i] = (u0a && u0b) ? FactorKind::Root : (u0a != u0b) ? FactorKind::Skip : FactorKind::D;
  }
  return kinds;
}

std::pair<DecoratedSubexpression, DecoratedSubexpression> decorate_pair(
    const Expression& w, const Bits& e1, const Bits& e2) {
  DecoratedSubexpression d1 = decorate(w, e1);
  DecoratedSubexpression d2 = decorate(w, e2);
  if (d1.endpoint != d2.endpoint)
    fail(ErrorCode::EndpointMismatch, "the two subexpressions have different endpoints");
  return {std::move(d1), std::move(d2)};
}

}  // namespace

NHElement f_element(const Expression& w, const Bits& e1, const Bits& e2) {
  auto [d1, d2] = decorate_pair(w, e1, e2);
  auto kinds = factor_kinds(w, d1, d2);
  const CoxeterSystem& sys = w.system;
  PushdownCache cache;
  NHElement e = nh_one(sys);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    int s = w.letters[i];
    switch (kinds[i]) {
      case FactorKind::Root: {
        std::vector<BigInt> unit(sys.rank(), 0);
        unit[s] = 1;
        e = mul_right_linear_cached(e, unit, cache);
        break;
      }
      case FactorKind::Skip:
        break;
      case FactorKind::D:
        e = mul_right_D(e, s);
        break;
    }
    if (e.is_zero()) break;
  }
  return e;
}

Polynomial d_coefficient(const Expression& w, const Bits& e1, const Bits& e2) {
  auto [d1, d2] = decorate_pair(w, e1, e2);
  if (has_D1(d1) || has_D1(d2))
    fail(ErrorCode::HasD1, "pairing is only defined for subexpressions without D1");
  NHElement e = f_element(w, e1, e2);
  return e.coefficient(d1.endpoint);
}

// ---------------------------------------------------------------------
// delta-basis oracle

namespace {

// Splits a nonzero linear form into (normalized key, sign): the first
// nonzero coefficient of the key is positive.
std::pair<std::vector<BigInt>, int> normalize_linear(const Polynomial& lin) {
  std::vector<BigInt> c = lin.linear_coefficients();
  for (const BigInt& v : c) {
    if (v == 0) continue;
    if (v > 0) return {c, 1};
    for (BigInt& x : c) x = -x;
    return {c, -1};
  }
  fail(ErrorCode::Internal, "attempted division by the zero linear form");
}

}  // namespace

RationalFunction RationalFunction::from_poly(Polynomial f) {
  RationalFunction r;
  r.num_ = std::move(f);
  return r;
}

Polynomial RationalFunction::numerator() const { return num_; }

Polynomial RationalFunction::denominator() const {
  Polynomial d = Polynomial::constant(num_.system(), den_const_);
  for (const auto& [key, mult] : den_) {
    Polynomial lin = Polynomial::linear(num_.system(), key);
    for (unsigned k = 0; k < mult; ++k) d = d * lin;
  }
  return d;
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
  RationalFunction out;
  out.den_const_ = den_const_ / boost::multiprecision::gcd(den_const_, g.den_const_) * g.den_const_;
  out.den_ = den_;
  for (const auto& [key, mult] : g.den_) {
    auto it = out.den_.find(key);
    if (it == out.den_.end())
      out.den_.emplace(key, mult);
    else
      it->second = std::max(it->second, mult);
  }
  const CoxeterSystem& sys = num_.valid() ? num_.system() : g.num_.system();
  auto complement = [&](const RationalFunction& r) {
    Polynomial scale = Polynomial::constant(sys, out.den_const_ / r.den_const_);
    for (const auto& [key, mult] : out.den_) {
      auto it = r.den_.find(key);
      unsigned have = it == r.den_.end() ? 0 : it->second;
      Polynomial lin = Polynomial::linear(sys, key);
      for (unsigned k = have; k < mult; ++k) scale = scale * lin;
    }
    return r.num_ * scale;
  };
  out.num_ = complement(*this) + complement(g);
  if (out.num_.is_zero()) {
    out.den_.clear();
    out.den_const_ = 1;
  }
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::mul_poly(const Polynomial& f) const {
  RationalFunction out = *this;
  out.num_ = out.num_ * f;
  if (out.num_.is_zero()) {
    out.den_.clear();
    out.den_const_ = 1;
  }
  return out;
}

RationalFunction RationalFunction::div_linear(const Polynomial& lin) const {
  auto [key, sign] = normalize_linear(lin);
  RationalFunction out = *this;
  out.den_[key] += 1;
  if (sign < 0) out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::div_unit(const RationalFunction& u) const {
  if (!u.num_.is_constant())
    fail(ErrorCode::Internal, "div_unit requires a constant numerator");
  BigInt c = u.num_.constant_value();
  if (c == 0) fail(ErrorCode::Internal, "division by a zero rational function");
  RationalFunction out = *this;
  out.num_ = out.num_ * u.denominator();
  out.den_const_ *= big_abs(c);
  if (c < 0) out.num_ = -out.num_;
  return out;
}

bool RationalFunction::operator==(const RationalFunction& g) const {
  return num_ * g.denominator() == g.num_ * denominator();
}

bool RationalFunction::equals_poly(const Polynomial& f) const {
  return num_ == f * denominator();
}

std::string RationalFunction::str() const {
  if (den_.empty() && den_const_ == 1) return num_.str();
  return "(" + num_.str() + ") / (" + denominator().str() + ")";
}

RationalFunction DeltaElement::coefficient(const Element& w) const {
  auto it = coeffs_.find(w);
  if (it != coeffs_.end()) return it->second;
  return RationalFunction::from_poly(Polynomial::zero(sys_.valid() ? sys_ : w.system()));
}

void DeltaElement::add(const Element& w, const RationalFunction& f) {
  if (f.is_zero()) return;
  if (!sys_.valid()) sys_ = w.system();
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    coeffs_.emplace(w, f);
  } else {
    RationalFunction sum = it->second + f;
    if (sum.is_zero())
      coeffs_.erase(it);
    else
      it->second = std::move(sum);
  }
}

DeltaElement delta_product(const CoxeterSystem& sys, const std::vector<DeltaFactor>& factors) {
  DeltaElement e(sys);
  e.add(sys.identity(), RationalFunction::from_poly(Polynomial::constant(sys, 1)));
  for (const auto& factor : factors) {
    if (std::holds_alternative<Polynomial>(factor)) {
      const Polynomial& f = std::get<Polynomial>(factor);
      DeltaElement next(sys);
      for (const auto& [x, g] : e.coeffs()) next.add(x, g.mul_poly(apply(x, f)));
      e = std::move(next);
    } else {
      int s = std::get<DeltaFactorD>(factor).s;
      DeltaElement next(sys);
      for (const auto& [x, g] : e.coeffs()) {
        Polynomial root = apply(x, Polynomial::variable(sys, s));
        RationalFunction t = g.div_linear(root);
        next.add(x, t);
        next.add(x.times(s), -t);
      }
      e = std::move(next);
    }
  }
  return e;
}

DeltaElement delta_D_basis(const Element& x) {
  std::vector<DeltaFactor> factors;
  for (int s : canonical_word(x)) factors.push_back(DeltaFactorD{s});
  return delta_product(x.system(), factors);
}

RationalFunction oracle_delta_d(const Expression& w, const Bits& e1, const Bits& e2,
                                unsigned oracle_bound) {
  if (w.letters.size() > oracle_bound)
    fail(ErrorCode::OracleBoundExceeded,
         "word length " + std::to_string(w.letters.size()) + " exceeds the oracle bound " +
             std::to_string(oracle_bound));
  auto [d1, d2] = decorate_pair(w, e1, e2);
  if (has_D1(d1) || has_D1(d2))
    fail(ErrorCode::HasD1, "pairing is only defined for subexpressions without D1");
  const CoxeterSystem& sys = w.system;
  auto kinds = factor_kinds(w, d1, d2);
  std::vector<DeltaFactor> factors;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == FactorKind::Root)
      factors.push_back(Polynomial::variable(sys, w.letters[i]));
    else if (kinds[i] == FactorKind::D)
      factors.push_back(DeltaFactorD{w.letters[i]});
  }
  DeltaElement product = delta_product(sys, factors);
  const Element& x = d1.endpoint;
  RationalFunction top = product.coefficient(x);
  if (top.is_zero()) return top;
  // {D_w} is triangular against {delta_w}: the delta_x coefficient of
  // the product can only come from its D_x component.
  RationalFunction unit = delta_D_basis(x).coefficient(x);
  return top.div_unit(unit);
}

}  // namespace nh
