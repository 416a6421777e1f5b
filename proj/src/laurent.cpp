#include "laurent.hpp"

#include <sstream>

namespace nh {

LaurentPoly LaurentPoly::monomial(int exp, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
  return p;
}

BigInt LaurentPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& g) const {
  LaurentPoly out = *this;
  out += g;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& g) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : g.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& g) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : g.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

BigInt LaurentPoly::evaluate_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
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
    if (e == 0) {
      os << coeff;
    } else {
      if (coeff != 1) os << coeff << '*';
      if (e == 1)
        os << 'v';
      else
        os << "v^" << e;
    }
  }
  return os.str();
}

}  // namespace nh
