#ifndef LIEVA_COEFF_HPP
#define LIEVA_COEFF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "lieva/errors.hpp"

namespace lieva {

using Int = boost::multiprecision::cpp_int;

/// Coefficient domain of every computation: the integers, or the integers
/// modulo m (m >= 2, not necessarily prime).  Coefficients are kept in
/// canonical form: arbitrary integers over Integers, residues 0..m-1 over
/// Modular(m).
class CoeffDomain {
 public:
  static CoeffDomain integers() { return CoeffDomain(0); }
  static CoeffDomain modular(const Int& m) {
    if (m < 2) throw InputError("modulus must be >= 2");
    return CoeffDomain(m);
  }

  bool is_integers() const { return m_ == 0; }
  bool is_modular() const { return m_ != 0; }

  /// Additive exponent of the domain: 0 for Integers, m for Modular(m).
  const Int& characteristic() const { return m_; }

  bool is_prime_field() const;

  Int canon(const Int& c) const {
    if (m_ == 0) return c;
    Int r = c % m_;
    if (r < 0) r += m_;
    return r;
  }

  Int add(const Int& a, const Int& b) const { return canon(a + b); }
  Int sub(const Int& a, const Int& b) const { return canon(a - b); }
  Int mul(const Int& a, const Int& b) const { return canon(a * b); }
  Int neg(const Int& a) const { return canon(-a); }

  /// Multiplicative inverse; requires a prime modulus.
  Int inv(const Int& a) const;

  bool operator==(const CoeffDomain& o) const { return m_ == o.m_; }
  bool operator!=(const CoeffDomain& o) const { return m_ != o.m_; }

  /// CLI spelling: "int" or "zmod:<m>".
  std::string str() const;
  static CoeffDomain parse(const std::string& text);

 private:
  explicit CoeffDomain(Int m) : m_(std::move(m)) {}
  Int m_;  // 0 means Integers
};

}  // namespace lieva

#endif
