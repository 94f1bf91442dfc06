#pragma once

#include <cstddef>
#include <string>

#include "gonal/bigint.hpp"

namespace gonal {

// Least s >= 1 with q^s = 1 mod p. Throws invalid-parameters when p | q.
unsigned order_mod(unsigned q, unsigned p);

/// The triple (p, q, r) of a cyclic p-gonal curve with r branch points and
/// a prime q for its q-homology cover, together with the derived quantities
/// every other module reads.
///
/// Valid triples have p an odd prime, q a prime different from p, r >= 3 and
/// gcd(p, q - 1) = 1, which makes every Φ-orbit of hyperplanes have size p.
/// Genus 1 triples (p = 3, r = 3) are rejected unless `allow_low_genus` is
/// set; they exist for brute-force oracle runs.
class CoverParams {
 public:
  static CoverParams make(unsigned p, unsigned q, unsigned r, bool allow_low_genus = false);
  // Skips the gcd and genus conditions, for negative tests only. t() is 0
  // when p does not divide m.
  static CoverParams make_unrestricted(unsigned p, unsigned q, unsigned r);

  unsigned p() const { return p_; }
  unsigned q() const { return q_; }
  unsigned r() const { return r_; }
  // Genus of the base curve, (p-1)(r-2)/2.
  unsigned g() const { return (p_ - 1) * (r_ - 2) / 2; }
  // Rank of the homology group, 2g = (p-1)(r-2).
  std::size_t n() const { return std::size_t{p_ - 1} * (r_ - 2); }
  unsigned s0() const { return s0_; }
  // q^n
  const BigInt& group_size() const { return group_size_; }
  // Number of hyperplanes, (q^n - 1)/(q - 1).
  const BigInt& m() const { return m_; }
  // Number of Φ-orbits of hyperplanes, m / p.
  const BigInt& t() const { return t_; }

  std::string label() const;
  bool operator==(const CoverParams& o) const {
    return p_ == o.p_ && q_ == o.q_ && r_ == o.r_;
  }

 private:
  CoverParams() = default;
  static CoverParams build(unsigned p, unsigned q, unsigned r, bool allow_low_genus, bool require_coprime);
  unsigned p_ = 0, q_ = 0, r_ = 0, s0_ = 0;
  BigInt group_size_, m_, t_;
};

}  // namespace gonal
