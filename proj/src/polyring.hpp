#pragma once

// Exact multivariate polynomials in the simple-root variables over
// arbitrary-precision integers, with the reflection action and the
// Demazure operators d_s(f) = (f - sf)/alpha_s. The grading assigns
// degree 2 to every variable.

#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coxeter.hpp"

namespace nh {

// Exponent vector, one slot per generator.
using Monomial = std::vector<unsigned>;

// Graded lexicographic term order (by generator order), arranged so
// that map iteration yields display order: higher degree first.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, TermOrder>;

  Polynomial() = default;

  static Polynomial zero(const CoxeterSystem& sys);
  static Polynomial constant(const CoxeterSystem& sys, BigInt c);
  static Polynomial variable(const CoxeterSystem& sys, int s);  // alpha_s
  static Polynomial linear(const CoxeterSystem& sys, const std::vector<BigInt>& coeffs);

  bool valid() const { return sys_.valid(); }
  const CoxeterSystem& system() const { return sys_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_value() const;  // 0 for the zero polynomial

  // 2 * (max total exponent); -1 for the zero polynomial.
  int graded_degree() const;
  bool is_homogeneous() const;
  // Homogeneous of graded degree 2, i.e. an integer combination of the
  // simple roots (the zero polynomial counts).
  bool is_linear() const;
  std::vector<BigInt> linear_coefficients() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(const BigInt& c) const;
  Polynomial& operator+=(const Polynomial& g);

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  // Deterministic rendering, e.g. "a_s^2*a_t - 2".
  std::string str() const;

 private:
  friend Polynomial act(int, const Polynomial&);
  friend Polynomial apply(const Element&, const Polynomial&);
  friend Polynomial demazure(int, const Polynomial&);
  void add_term(const Monomial& m, const BigInt& c);
  void require_same(const Polynomial& g) const;

  CoxeterSystem sys_;
  TermMap terms_;  // no zero coefficients stored
};

// Action of the generator s: substitutes alpha_t -> alpha_t - cartan[s][t] alpha_s.
Polynomial act(int s, const Polynomial& f);

// Action of an arbitrary element through its matrix.
Polynomial apply(const Element& w, const Polynomial& f);

// Demazure operator; division by alpha_s is checked to be exact.
Polynomial demazure(int s, const Polynomial& f);

}  // namespace nh
