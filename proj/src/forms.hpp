#pragma once

// Gram matrices of light-leaves pairings over a chosen set of
// subexpressions, with integer specialization, determinant, elementary
// divisors and torsion primes.

#include <optional>
#include <vector>

#include "nilhecke.hpp"

namespace nh {

using BigMatrix = std::vector<std::vector<BigInt>>;

struct GramReport {
  Expression word;
  Element x;
  SubexprFilter filter;
  std::vector<DecoratedSubexpression> basis;   // lexicographic bits order, no D1
  std::vector<std::vector<Polynomial>> entries;  // symmetric
  std::optional<BigMatrix> constant_matrix;    // present iff every entry is constant
  std::optional<BigInt> determinant;
  std::optional<std::vector<BigInt>> elementary_divisors;
  std::optional<std::vector<BigInt>> torsion_primes;  // sorted primes
};

// Pairs every basis element against every other with d_coefficient;
// entries are computed for i <= j and mirrored. The filter always
// enforces no_d1 (pairings with a D1 are undefined here).
GramReport gram_matrix(const Expression& w, const Element& x, SubexprFilter filter = {});

// Elementary divisor chain d_1 | d_2 | ... (nonnegative, zeros last),
// by fraction-free integer pivoting on the entry of least absolute
// value.
std::vector<BigInt> smith_normal_form(BigMatrix m);

// Exact determinant (Bareiss elimination).
BigInt determinant(BigMatrix m);

// Primes dividing an elementary divisor other than 0 and 1. Requires
// the report to have a constant matrix.
std::vector<BigInt> torsion_primes(const GramReport& report);

std::vector<BigInt> prime_factors(BigInt n);

}  // namespace nh
