#pragma once

// The nil Hecke ring in its D-basis with polynomial coefficients.
//
// Elements are finite left-R-linear combinations sum f_w D_w. The only
// products the library needs are right multiplications by D_s and by
// polynomials; the latter are pushed through reduced words one letter
// at a time using D_s f = (sf) D_s + d_s(f). A separate delta-basis
// computation over rational functions serves as an independent oracle
// for the coefficient extraction d(e1, e2).

#include <map>
#include <variant>
#include <vector>

#include "polyring.hpp"
#include "subexpr.hpp"

namespace nh {

class NHElement {
 public:
  NHElement() = default;
  explicit NHElement(const CoxeterSystem& sys) : sys_(sys) {}

  const CoxeterSystem& system() const { return sys_; }
  bool is_zero() const { return coeffs_.empty(); }
  Polynomial coefficient(const Element& w) const;
  const std::map<Element, Polynomial>& coeffs() const { return coeffs_; }
  std::vector<Element> support() const;

  void add(const Element& w, const Polynomial& f);
  NHElement& operator+=(const NHElement& other);
  NHElement scaled(const Polynomial& f) const;  // left multiplication by f
  bool operator==(const NHElement& other) const;
  bool operator!=(const NHElement& other) const { return !(*this == other); }

 private:
  CoxeterSystem sys_;
  std::map<Element, Polynomial> coeffs_;  // no zero polynomials stored
};

NHElement nh_one(const CoxeterSystem& sys);
NHElement nh_basis(const Element& w);  // D_w with coefficient 1

// f D_w -> f D_{ws} when ws > w, dropped otherwise.
NHElement mul_right_D(const NHElement& e, int s);
NHElement mul_left_D(int s, const NHElement& e);

// Right multiplication by a linear form (an integer combination of
// simple roots) or by a general polynomial.
NHElement mul_right_linear(const NHElement& e, const Polynomial& lin);
NHElement mul_right_poly(const NHElement& e, const Polynomial& f);

// The product f_1 ... f_m where factor i is alpha_{s_i} when both
// sequences have decoration U0 there, is skipped when exactly one has
// U0, and is D_{s_i} otherwise. Endpoints of e1 and e2 must agree.
NHElement f_element(const Expression& w, const Bits& e1, const Bits& e2);

// Coefficient of D_x in f_element, x the common endpoint. Requires
// both decorated sequences to be free of D1.
Polynomial d_coefficient(const Expression& w, const Bits& e1, const Bits& e2);

// ---------------------------------------------------------------------
// delta-basis oracle over the fraction field.

// Rational function whose denominator is kept as a factored product of
// linear forms (the only divisions that ever occur are by roots).
// Equality is decided by cross-multiplication; no gcd reduction.
class RationalFunction {
 public:
  RationalFunction() = default;
  static RationalFunction from_poly(Polynomial f);

  bool valid() const { return num_.valid(); }
  bool is_zero() const { return num_.is_zero(); }
  Polynomial numerator() const;
  Polynomial denominator() const;  // expanded, leading coefficient positive

  RationalFunction operator+(const RationalFunction& g) const;
  RationalFunction operator-() const;
  RationalFunction mul_poly(const Polynomial& f) const;
  RationalFunction div_linear(const Polynomial& lin) const;
  // Division by a rational function with constant numerator.
  RationalFunction div_unit(const RationalFunction& u) const;

  bool operator==(const RationalFunction& g) const;
  bool equals_poly(const Polynomial& f) const;
  std::string str() const;

 private:
  // Denominators only ever acquire factors that are images of simple
  // roots, so they are kept as a factored product of sign-normalized
  // linear forms times a positive integer; signs are folded into the
  // numerator eagerly.
  Polynomial num_;
  BigInt den_const_ = 1;
  std::map<std::vector<BigInt>, unsigned> den_;  // normalized linear form -> multiplicity
};

class DeltaElement {
 public:
  DeltaElement() = default;
  explicit DeltaElement(const CoxeterSystem& sys) : sys_(sys) {}
  const std::map<Element, RationalFunction>& coeffs() const { return coeffs_; }
  RationalFunction coefficient(const Element& w) const;
  void add(const Element& w, const RationalFunction& f);

 private:
  CoxeterSystem sys_;
  std::map<Element, RationalFunction> coeffs_;
};

struct DeltaFactorD {
  int s;
};
using DeltaFactor = std::variant<DeltaFactorD, Polynomial>;

DeltaElement delta_product(const CoxeterSystem& sys, const std::vector<DeltaFactor>& factors);
DeltaElement delta_D_basis(const Element& x);  // D_x expanded in the delta basis

inline constexpr unsigned kDefaultOracleBound = 12;

// Same value as d_coefficient, computed entirely in the delta basis
// with rational-function coefficients. Words longer than the bound are
// rejected (the oracle is exponentially slower than the D-basis path).
RationalFunction oracle_delta_d(const Expression& w, const Bits& e1, const Bits& e2,
                                unsigned oracle_bound = kDefaultOracleBound);

}  // namespace nh
