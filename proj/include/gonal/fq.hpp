#pragma once

// Dense linear algebra over a prime field F_q.
//
// Vectors are plain residue sequences; the modulus travels with the
// containing matrix or subspace and is checked whenever two values meet.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gonal {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Arithmetic in Z/qZ for a prime q. Inverses are computed as a^(q-2).
class PrimeField {
 public:
  explicit PrimeField(Residue q);

  Residue modulus() const { return q_; }
  Residue reduce(std::int64_t v) const;
  Residue add(Residue a, Residue b) const { return (a + b) % q_; }
  Residue sub(Residue a, Residue b) const { return (a + q_ - b) % q_; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % q_);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : q_ - a; }
  Residue inv(Residue a) const;

 private:
  Residue q_;
};

/// A single element of F_q that remembers its modulus.
class FieldScalar {
 public:
  FieldScalar(std::int64_t value, Residue modulus);

  Residue value() const { return value_; }
  Residue modulus() const { return modulus_; }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;
  bool operator==(const FieldScalar&) const = default;

 private:
  void check_same(const FieldScalar& o) const;
  Residue value_;
  Residue modulus_;
};

class FqMatrix {
 public:
  FqMatrix(Residue modulus, std::size_t rows, std::size_t cols);

  static FqMatrix identity(Residue modulus, std::size_t n);
  // Every row must have exactly `cols` entries; entries are reduced mod q.
  static FqMatrix from_rows(Residue modulus, std::size_t cols,
                            const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue modulus() const { return modulus_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  FqMatrix operator*(const FqMatrix& rhs) const;
  // M x, treating x as a column.
  Vector apply(const Vector& x) const;
  // h M, treating h as a row.
  Vector apply_left(const Vector& h) const;
  FqMatrix power(std::uint64_t e) const;
  FqMatrix transpose() const;
  FqMatrix vstack(const FqMatrix& below) const;
  bool is_identity() const;
  bool is_zero() const;

  bool operator==(const FqMatrix&) const = default;
  std::strong_ordering operator<=>(const FqMatrix& o) const;

  std::string to_string() const;

 private:
  Residue modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  FqMatrix form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FqMatrix& m);

/// Subspace of F_q^n held as the unique reduced row-echelon basis of its
/// row space, zero rows dropped. Two subspaces are equal iff their bases are.
class Subspace {
 public:
  static Subspace span(Residue modulus, std::size_t ambient_dim,
                       const std::vector<Vector>& generators);
  static Subspace from_matrix(const FqMatrix& generators);
  static Subspace zero(Residue modulus, std::size_t ambient_dim);
  static Subspace full(Residue modulus, std::size_t ambient_dim);

  Residue modulus() const { return basis_.modulus(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector& v) const;
  // Reduces v modulo the subspace; the result vanishes on every pivot column.
  Vector reduce(const Vector& v) const;
  // Linear functionals vanishing on the subspace, as row vectors.
  Subspace annihilator() const;
  // t·V for a square matrix t acting on columns.
  Subspace image(const FqMatrix& t) const;
  bool is_invariant_under(const FqMatrix& t) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  std::strong_ordering operator<=>(const Subspace& o) const {
    return basis_ <=> o.basis_;
  }

 private:
  explicit Subspace(RrefResult r);
  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : m x = 0}
Subspace kernel(const FqMatrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const Vector& v);

// Base-q code of a vector with coordinate 0 most significant, so numeric
// order on codes is lexicographic order on vectors.
std::uint64_t encode_vector(const Vector& v, Residue q);
Vector decode_vector(std::uint64_t code, std::size_t n, Residue q);
// q^n, saturating at UINT64_MAX.
std::uint64_t checked_space_size(Residue q, std::size_t n);

std::string format_vector(const Vector& v);

}  // namespace gonal
