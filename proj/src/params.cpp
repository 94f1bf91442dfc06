#include "gonal/params.hpp"

#include <numeric>

#include "gonal/errors.hpp"
#include "gonal/fq.hpp"

namespace gonal {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::invalid_parameters, what);
}

}  // namespace

unsigned order_mod(unsigned q, unsigned p) {
  if (p < 2) invalid("modulus must be at least 2");
  if (q % p == 0) invalid("q = " + std::to_string(q) + " is divisible by p = " + std::to_string(p));
  if (std::gcd(q, p) != 1) invalid("q and p are not coprime");
  std::uint64_t x = q % p;
  for (unsigned s = 1; s <= p; ++s) {
    if (x == 1) return s;
    x = x * q % p;
  }
  throw Error(ErrorKind::internal_inconsistency, "order_mod did not terminate");
}

CoverParams CoverParams::make(unsigned p, unsigned q, unsigned r, bool allow_low_genus) {
  return build(p, q, r, allow_low_genus, true);
}

CoverParams CoverParams::make_unrestricted(unsigned p, unsigned q, unsigned r) {
  return build(p, q, r, true, false);
}

CoverParams CoverParams::build(unsigned p, unsigned q, unsigned r, bool allow_low_genus,
                               bool require_coprime) {
  if (p < 3 || !is_prime(p)) invalid("p = " + std::to_string(p) + " is not an odd prime");
  if (!is_prime(q)) invalid("q = " + std::to_string(q) + " is not prime");
  if (p == q) invalid("p and q must differ");
  if (r < 3) invalid("r = " + std::to_string(r) + " must be at least 3");
  if (q > (1u << 16) || p > (1u << 16) || r > 4096) invalid("parameters out of supported range");
  if (require_coprime && std::gcd(p, q - 1) != 1)
    invalid("gcd(p, q-1) = " + std::to_string(std::gcd(p, q - 1)) +
            "; hyperplane orbits need gcd(p, q-1) = 1");

  CoverParams c;
  c.p_ = p;
  c.q_ = q;
  c.r_ = r;
  if (c.g() < 2 && !allow_low_genus)
    invalid("genus g = " + std::to_string(c.g()) + " < 2 (low-genus triples are oracle-only)");
  c.s0_ = order_mod(q, p);
  c.group_size_ = big_pow(q, c.n());
  c.m_ = (c.group_size_ - 1) / (q - 1);
  if (c.m_ % p != 0) {
    if (require_coprime)
      throw Error(ErrorKind::internal_inconsistency, "p does not divide the hyperplane count");
    c.t_ = 0;
  } else {
    c.t_ = c.m_ / p;
  }
  return c;
}

std::string CoverParams::label() const {
  return "p=" + std::to_string(p_) + " q=" + std::to_string(q_) + " r=" + std::to_string(r_);
}

}  // namespace gonal
