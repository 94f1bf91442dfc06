#pragma once

#include <gmpxx.h>

#include <string>

namespace gonal {

using BigInt = mpz_class;

inline BigInt big_pow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s, 10); }

}  // namespace gonal
