#pragma once

// Hecke algebra in the standard basis over Z[v, v^-1]; products of the
// elements H_s + v, and the Deodhar-style cross-check of their
// coefficients against defect generating functions.

#include <map>
#include <string>

#include "laurent.hpp"
#include "subexpr.hpp"

namespace nh {

class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(const CoxeterSystem& sys) : sys_(sys) {}

  const CoxeterSystem& system() const { return sys_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Element, LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coefficient(const Element& w) const;
  void add(const Element& w, const LaurentPoly& p);
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement scaled(const LaurentPoly& p) const;
  bool operator==(const HeckeElement& other) const { return coeffs_ == other.coeffs_; }

 private:
  CoxeterSystem sys_;
  std::map<Element, LaurentPoly> coeffs_;
};

HeckeElement hecke_one(const CoxeterSystem& sys);
HeckeElement hecke_basis(const Element& w);

// H_y H_s = H_{ys} when ys > y, and H_{ys} + (v^-1 - v) H_y otherwise.
HeckeElement mul_right_Hs(const HeckeElement& e, int s);

// prod_i (H_{s_i} + v) in the standard basis.
HeckeElement bott_samelson_product(const Expression& w);

struct DeodharReport {
  bool pass = true;
  std::size_t support_size = 0;
  std::string detail;  // first discrepancy, empty when pass
};

// For every x in the support of the Bott-Samelson product, the
// coefficient of H_x must equal the defect generating function of x;
// the v=1 total must account for all 2^m subexpressions.
DeodharReport deodhar_check(const Expression& w);

}  // namespace nh
