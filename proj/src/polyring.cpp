#include "polyring.hpp"

#include <numeric>
#include <sstream>

namespace nh {

namespace {
unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}
}  // namespace

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, leading generator weighs most
}

Polynomial Polynomial::zero(const CoxeterSystem& sys) {
  Polynomial f;
  f.sys_ = sys;
  return f;
}

Polynomial Polynomial::constant(const CoxeterSystem& sys, BigInt c) {
  Polynomial f = zero(sys);
  if (c != 0) f.terms_.emplace(Monomial(sys.rank(), 0), std::move(c));
  return f;
}

Polynomial Polynomial::variable(const CoxeterSystem& sys, int s) {
  if (s < 0 || s >= sys.rank()) fail(ErrorCode::BadGenerator, "variable index out of range");
  Polynomial f = zero(sys);
  Monomial m(sys.rank(), 0);
  m[s] = 1;
  f.terms_.emplace(std::move(m), BigInt(1));
  return f;
}

Polynomial Polynomial::linear(const CoxeterSystem& sys, const std::vector<BigInt>& coeffs) {
  if (static_cast<int>(coeffs.size()) != sys.rank())
    fail(ErrorCode::InvalidArgument, "linear coefficient count does not match rank");
  Polynomial f = zero(sys);
  for (int s = 0; s < sys.rank(); ++s) {
    if (coeffs[s] == 0) continue;
    Monomial m(sys.rank(), 0);
    m[s] = 1;
    f.terms_.emplace(std::move(m), coeffs[s]);
  }
  return f;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

BigInt Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) fail(ErrorCode::NonConstantEntries, "polynomial is not constant: " + str());
  return terms_.begin()->second;
}

int Polynomial::graded_degree() const {
  if (terms_.empty()) return -1;
  return 2 * static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

bool Polynomial::is_linear() const {
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != 1) return false;
  return true;
}

std::vector<BigInt> Polynomial::linear_coefficients() const {
  if (!is_linear()) fail(ErrorCode::NotLinear, "polynomial is not a combination of simple roots: " + str());
  std::vector<BigInt> out(sys_.rank(), 0);
  for (const auto& [m, c] : terms_)
    for (int s = 0; s < sys_.rank(); ++s)
      if (m[s] == 1) out[s] = c;
  return out;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same(const Polynomial& g) const {
  if (!sys_.valid() || !g.sys_.valid())
    fail(ErrorCode::InvalidArgument, "uninitialized polynomial");
  if (!sys_.same_system(g.sys_))
    fail(ErrorCode::SystemMismatch, "polynomials over different Coxeter systems");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same(g);
  Polynomial out = *this;
  for (const auto& [m, c] : g.terms_) out.add_term(m, c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same(g);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::scaled(const BigInt& c) const {
  Polynomial out = zero(sys_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same(g);
  Polynomial out = zero(sys_);
  const int n = sys_.rank();
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : g.terms_) {
      Monomial m(n);
      for (int i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

bool Polynomial::operator==(const Polynomial& g) const {
  require_same(g);
  return terms_ == g.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt coeff = c;
    if (first) {
      if (coeff < 0) {
        os << '-';
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string mono;
    for (int s = 0; s < sys_.rank(); ++s) {
      if (m[s] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "a_" + sys_.generator_name(s);
      if (m[s] > 1) mono += '^' + std::to_string(m[s]);
    }
    if (mono.empty()) {
      os << coeff;
    } else {
      if (coeff != 1) os << coeff << '*';
      os << mono;
    }
  }
  return os.str();
}

namespace {

// Expands prod images[s]^{m[s]} for one monomial, caching powers.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const CoxeterSystem& sys = f.system();
  const int n = sys.rank();
  std::vector<std::vector<Polynomial>> powers(n);  // powers[s][k] = images[s]^k
  for (int s = 0; s < n; ++s) powers[s].push_back(Polynomial::constant(sys, 1));
  Polynomial out = Polynomial::zero(sys);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(sys, c);
    for (int s = 0; s < n; ++s) {
      if (m[s] == 0) continue;
      auto& pw = powers[s];
      while (pw.size() <= m[s]) pw.push_back(pw.back() * images[s]);
      term = term * pw[m[s]];
    }
    out += term;
  }
  return out;
}

}  // namespace

Polynomial act(int s, const Polynomial& f) {
  const CoxeterSystem& sys = f.system();
  if (s < 0 || s >= sys.rank()) fail(ErrorCode::BadGenerator, "generator index out of range");
  const int n = sys.rank();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int t = 0; t < n; ++t) {
    Polynomial img = Polynomial::variable(sys, t);
    Int c = sys.cartan(s, t);
    if (c != 0) img += Polynomial::variable(sys, s).scaled(BigInt(-c));
    images.push_back(std::move(img));
  }
  return substitute(f, images);
}

Polynomial apply(const Element& w, const Polynomial& f) {
  const CoxeterSystem& sys = f.system();
  if (!w.system().same_system(sys))
    fail(ErrorCode::SystemMismatch, "element and polynomial over different systems");
  if (w.is_identity()) return f;
  const int n = sys.rank();
  IntMatrix m = w.matrix();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int t = 0; t < n; ++t) {
    std::vector<BigInt> coeffs(n);
    for (int i = 0; i < n; ++i) coeffs[i] = m.at(i, t);
    images.push_back(Polynomial::linear(sys, coeffs));
  }
  return substitute(f, images);
}

Polynomial demazure(int s, const Polynomial& f) {
  Polynomial diff = f - act(s, f);
  Polynomial out = Polynomial::zero(f.system());
  for (const auto& [m, c] : diff.terms()) {
    if (m[s] == 0)
      fail(ErrorCode::InexactDivision, "f - sf is not divisible by alpha_s");
    Monomial q = m;
    --q[s];
    out.add_term(q, c);
  }
  return out;
}

}  // namespace nh
