#include "forms.hpp"

#include <algorithm>

namespace nh {

GramReport gram_matrix(const Expression& w, const Element& x, SubexprFilter filter) {
  filter.no_d1 = true;
  GramReport report;
  report.word = w;
  report.x = x;
  report.filter = filter;
  report.basis = enumerate_subexpressions(w, x, filter);
  const std::size_t n = report.basis.size();
  report.entries.assign(n, std::vector<Polynomial>(n, Polynomial::zero(w.system)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Polynomial d = d_coefficient(w, report.basis[i].bits, report.basis[j].bits);
      report.entries[i][j] = d;
      report.entries[j][i] = d;
    }

  bool constant = true;
  for (const auto& row : report.entries)
    for (const auto& entry : row)
      if (!entry.is_constant()) constant = false;
  if (constant) {
    BigMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = report.entries[i][j].constant_value();
    report.constant_matrix = m;
    report.determinant = determinant(m);
    report.elementary_divisors = smith_normal_form(std::move(m));
    report.torsion_primes = torsion_primes(report);
  }
  return report;
}

namespace {

// (row, col) of a nonzero entry of least absolute value in the
// submatrix starting at (k, k), if any.
bool find_pivot(const BigMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best = 0;
  for (std::size_t i = k; i < m.size(); ++i)
    for (std::size_t j = k; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = big_abs(m[i][j]);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

std::vector<BigInt> smith_normal_form(BigMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t steps = std::min(rows, cols);
  std::vector<BigInt> divisors(steps, 0);

  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(m, k, pi, pj)) goto done;  // remaining block is zero
      std::swap(m[pi], m[k]);
      if (pj != k)
        for (auto& row : m) std::swap(row[pj], row[k]);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        BigInt q = m[i][k] / m[k][k];
        if (q != 0)
          for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        BigInt q = m[k][j] / m[k][k];
        if (q != 0)
          for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders exist; pick a new pivot

      // divisibility: fold in any entry the pivot does not divide
      bool fixed = false;
      for (std::size_t i = k + 1; i < rows && !fixed; ++i)
        for (std::size_t j = k + 1; j < cols && !fixed; ++j)
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t jj = k; jj < cols; ++jj) m[k][jj] += m[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    divisors[k] = big_abs(m[k][k]);
  }
done:
  return divisors;
}

BigInt determinant(BigMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> out;
  n = big_abs(n);
  if (n < 2) return out;
  for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<BigInt> torsion_primes(const GramReport& report) {
  if (!report.constant_matrix)
    fail(ErrorCode::NonConstantEntries, "torsion primes require a constant Gram matrix");
  std::vector<BigInt> primes;
  if (report.elementary_divisors) {
    for (const BigInt& d : *report.elementary_divisors) {
      if (d == 0 || d == 1) continue;
      for (const BigInt& p : prime_factors(d))
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace nh
