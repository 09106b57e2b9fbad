#include "lieva/coeff.hpp"

namespace lieva {

bool CoeffDomain::is_prime_field() const {
  if (m_ < 2) return false;
  if (m_ == 2) return true;
  if (m_ % 2 == 0) return false;
  for (Int d = 3; d * d <= m_; d += 2)
    if (m_ % d == 0) return false;
  return true;
}

Int CoeffDomain::inv(const Int& a) const {
  if (!is_prime_field())
    throw DomainError("inverse requires a prime modulus, got " + str());
  // extended Euclid on (a mod m, m)
  Int r0 = canon(a), r1 = m_, s0 = 1, s1 = 0;
  if (r0 == 0) throw DomainError("division by zero in " + str());
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return canon(s0);
}

std::string CoeffDomain::str() const {
  return m_ == 0 ? std::string("int") : "zmod:" + m_.str();
}

CoeffDomain CoeffDomain::parse(const std::string& text) {
  if (text == "int") return integers();
  if (text.rfind("zmod:", 0) == 0) {
    const std::string digits = text.substr(5);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad modulus in domain '" + text + "'");
    return modular(Int(digits));
  }
  throw InputError("unknown domain '" + text + "' (expected int or zmod:<m>)");
}

}  // namespace lieva
