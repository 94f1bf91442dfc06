#include "gonal/polynomial.hpp"

#include "gonal/errors.hpp"

namespace gonal {

Polynomial::Polynomial(Residue modulus, std::vector<std::int64_t> coeffs) : q_(modulus) {
  const PrimeField f(modulus);
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(f.reduce(v));
  trim();
}

Polynomial Polynomial::cyclotomic_prime(unsigned p, Residue modulus) {
  return Polynomial(modulus, std::vector<std::int64_t>(p, 1));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (q_ != o.q_) throw Error(ErrorKind::ambient_mismatch, "polynomial modulus mismatch");
  if (is_zero() || o.is_zero()) return zero(q_);
  const PrimeField f(q_);
  Polynomial out = zero(q_);
  out.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out.c_[i + j] = f.add(out.c_[i + j], f.mul(c_[i], o.c_[j]));
  out.trim();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (q_ != o.q_) throw Error(ErrorKind::ambient_mismatch, "polynomial modulus mismatch");
  const PrimeField f(q_);
  Polynomial out = zero(q_);
  out.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    Residue a = i < c_.size() ? c_[i] : 0;
    Residue b = i < o.c_.size() ? o.c_[i] : 0;
    out.c_[i] = f.sub(a, b);
  }
  out.trim();
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (q_ != divisor.q_) throw Error(ErrorKind::ambient_mismatch, "polynomial modulus mismatch");
  if (divisor.is_zero()) throw Error(ErrorKind::internal_inconsistency, "division by zero polynomial");
  const PrimeField f(q_);
  Polynomial rem = *this;
  Polynomial quot = zero(q_);
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {quot, rem};
  quot.c_.assign(static_cast<std::size_t>(rem.degree() - dd + 1), 0);
  const Residue lead_inv = f.inv(divisor.c_.back());
  for (int k = rem.degree(); k >= dd; --k) {
    const Residue c = f.mul(rem.c_[static_cast<std::size_t>(k)], lead_inv);
    if (c == 0) continue;
    quot.c_[static_cast<std::size_t>(k - dd)] = c;
    for (int i = 0; i <= dd; ++i) {
      auto& slot = rem.c_[static_cast<std::size_t>(k - dd + i)];
      slot = f.sub(slot, f.mul(c, divisor.c_[static_cast<std::size_t>(i)]));
    }
  }
  rem.trim();
  quot.trim();
  return {quot, rem};
}

FqMatrix Polynomial::evaluate(const FqMatrix& m) const {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ambient_mismatch, "evaluate: non-square matrix");
  if (m.modulus() != q_) throw Error(ErrorKind::ambient_mismatch, "evaluate: modulus mismatch");
  const std::size_t n = m.rows();
  FqMatrix acc(q_, n, n);
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc.set(i, i, std::int64_t{acc.at(i, i)} + c_[k]);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c_[k] != 1 || k == 0) s += std::to_string(c_[k]);
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace gonal
