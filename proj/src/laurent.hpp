#pragma once

// Laurent polynomials in v over arbitrary-precision integers.

#include <map>
#include <string>

#include "bigint.hpp"

namespace nh {

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int exp, BigInt coeff = 1);
  static LaurentPoly constant(BigInt c) { return monomial(0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int exp) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;

  void add_term(int exp, const BigInt& c);
  LaurentPoly operator+(const LaurentPoly& g) const;
  LaurentPoly operator-(const LaurentPoly& g) const;
  LaurentPoly operator*(const LaurentPoly& g) const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  bool operator==(const LaurentPoly& g) const { return terms_ == g.terms_; }

  BigInt evaluate_at_one() const;

  // "v^-1 + 2 + v^3", terms in ascending exponent order.
  std::string str() const;

 private:
  std::map<int, BigInt> terms_;  // exponent -> nonzero coefficient
};

}  // namespace nh
