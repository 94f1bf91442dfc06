#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gonal/fq.hpp"

namespace gonal {

// Polynomial over F_q, coefficients stored lowest degree first with no
// trailing zeros. The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial(Residue modulus, std::vector<std::int64_t> coeffs);

  static Polynomial zero(Residue modulus) { return Polynomial(modulus, {}); }
  // 1 + x + ... + x^(p-1)
  static Polynomial cyclotomic_prime(unsigned p, Residue modulus);

  Residue modulus() const { return q_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  // Quotient and remainder; the divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  // f(M) for a square matrix M, by Horner's rule.
  FqMatrix evaluate(const FqMatrix& m) const;

  bool operator==(const Polynomial&) const = default;
  std::string to_string() const;

 private:
  void trim();
  Residue q_;
  std::vector<Residue> c_;
};

}  // namespace gonal
