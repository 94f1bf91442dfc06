#include "gonal/fq.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "gonal/errors.hpp"

namespace gonal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameters: return "invalid-parameters";
    case ErrorKind::ambient_mismatch: return "ambient-mismatch";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::no_invariant_subspace: return "no-invariant-subspace";
    case ErrorKind::invariant_hyperplane: return "invariant-hyperplane";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::verification_failure: return "verification-failure";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1, b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

void require_same_modulus(Residue a, Residue b, const char* where) {
  if (a != b)
    throw Error(ErrorKind::ambient_mismatch,
                std::string(where) + ": modulus " + std::to_string(a) + " vs " +
                    std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------------------

PrimeField::PrimeField(Residue q) : q_(q) {
  if (!is_prime(q) || q > (1u << 16))
    throw Error(ErrorKind::invalid_parameters,
                "field modulus must be a prime below 2^16, got " + std::to_string(q));
}

Residue PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  return static_cast<Residue>(r < 0 ? r + q_ : r);
}

Residue PrimeField::inv(Residue a) const {
  if (a % q_ == 0) throw Error(ErrorKind::internal_inconsistency, "inverse of zero");
  return static_cast<Residue>(pow_mod(a, q_ - 2, q_));
}

FieldScalar::FieldScalar(std::int64_t value, Residue modulus)
    : value_(PrimeField(modulus).reduce(value)), modulus_(modulus) {}

void FieldScalar::check_same(const FieldScalar& o) const {
  require_same_modulus(modulus_, o.modulus_, "FieldScalar");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  return {std::int64_t{value_} + o.value_, modulus_};
}
FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  check_same(o);
  return {std::int64_t{value_} - o.value_, modulus_};
}
FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  return {static_cast<std::int64_t>(std::uint64_t{value_} * o.value_ % modulus_), modulus_};
}
FieldScalar FieldScalar::operator-() const { return {-std::int64_t{value_}, modulus_}; }
FieldScalar FieldScalar::inverse() const {
  return {PrimeField(modulus_).inv(value_), modulus_};
}
FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

// ---------------------------------------------------------------------------

FqMatrix::FqMatrix(Residue modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  PrimeField{modulus};
}

FqMatrix FqMatrix::identity(Residue modulus, std::size_t n) {
  FqMatrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(Residue modulus, std::size_t cols,
                             const std::vector<Vector>& rows) {
  FqMatrix m(modulus, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::ambient_mismatch,
                  "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                      " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c] % modulus;
  }
  return m;
}

void FqMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  std::int64_t x = v % static_cast<std::int64_t>(modulus_);
  data_[r * cols_ + c] = static_cast<Residue>(x < 0 ? x + modulus_ : x);
}

Vector FqMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<Vector> FqMatrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  require_same_modulus(modulus_, rhs.modulus_, "matrix product");
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::ambient_mismatch, "matrix product: inner dimensions differ");
  FqMatrix out(modulus_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = at(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto& cell = out.data_[i * rhs.cols_ + j];
        cell = static_cast<Residue>((cell + a * rhs.at(k, j)) % modulus_);
      }
    }
  return out;
}

Vector FqMatrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorKind::ambient_mismatch, "matrix-vector: length mismatch");
  Vector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{at(i, j)} * x[j];
    y[i] = static_cast<Residue>(acc % modulus_);
  }
  return y;
}

Vector FqMatrix::apply_left(const Vector& h) const {
  if (h.size() != rows_)
    throw Error(ErrorKind::ambient_mismatch, "vector-matrix: length mismatch");
  Vector y(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < rows_; ++i) acc += std::uint64_t{h[i]} * at(i, j);
    y[j] = static_cast<Residue>(acc % modulus_);
  }
  return y;
}

FqMatrix FqMatrix::power(std::uint64_t e) const {
  if (rows_ != cols_) throw Error(ErrorKind::ambient_mismatch, "power of non-square matrix");
  FqMatrix result = identity(modulus_, rows_);
  FqMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(modulus_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
  return t;
}

FqMatrix FqMatrix::vstack(const FqMatrix& below) const {
  require_same_modulus(modulus_, below.modulus_, "vstack");
  if (cols_ != below.cols_) throw Error(ErrorKind::ambient_mismatch, "vstack: column mismatch");
  FqMatrix out(modulus_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

std::strong_ordering FqMatrix::operator<=>(const FqMatrix& o) const {
  if (auto c = modulus_ <=> o.modulus_; c != 0) return c;
  if (auto c = rows_ <=> o.rows_; c != 0) return c;
  if (auto c = cols_ <=> o.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(data_.begin(), data_.end(),
                                                o.data_.begin(), o.data_.end());
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) os << format_vector(row_vector(i)) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

RrefResult rref(const FqMatrix& m) {
  const PrimeField f(m.modulus());
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Vector> a = m.row_vectors();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    const Residue s = f.inv(a[rank][c]);
    for (auto& x : a[rank]) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Residue factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k)
        a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return {FqMatrix::from_rows(m.modulus(), cols, a), rank, std::move(pivots)};
}

Subspace::Subspace(RrefResult r) : basis_(r.form.modulus(), r.rank, r.form.cols()) {
  std::vector<Vector> rows;
  rows.reserve(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) rows.push_back(r.form.row_vector(i));
  basis_ = FqMatrix::from_rows(r.form.modulus(), r.form.cols(), rows);
  pivots_ = std::move(r.pivots);
}

Subspace Subspace::from_matrix(const FqMatrix& generators) {
  return Subspace(rref(generators));
}

Subspace Subspace::span(Residue modulus, std::size_t ambient_dim,
                        const std::vector<Vector>& generators) {
  return from_matrix(FqMatrix::from_rows(modulus, ambient_dim, generators));
}

Subspace Subspace::zero(Residue modulus, std::size_t ambient_dim) {
  return from_matrix(FqMatrix(modulus, 0, ambient_dim));
}

Subspace Subspace::full(Residue modulus, std::size_t ambient_dim) {
  return from_matrix(FqMatrix::identity(modulus, ambient_dim));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorKind::ambient_mismatch, "vector length differs from ambient dimension");
  const PrimeField f(modulus());
  Vector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] % modulus();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Residue c = w[pivots_[i]];
    if (c == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = f.sub(w[k], f.mul(c, row[k]));
  }
  return w;
}

bool Subspace::contains(const Vector& v) const {
  const Vector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace Subspace::image(const FqMatrix& t) const {
  if (t.rows() != ambient_dim() || t.cols() != ambient_dim())
    throw Error(ErrorKind::ambient_mismatch, "image: matrix does not act on ambient space");
  if (t.modulus() != modulus()) throw Error(ErrorKind::ambient_mismatch, "image: modulus");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(t.apply(basis_.row_vector(i)));
  return span(modulus(), ambient_dim(), rows);
}

bool Subspace::is_invariant_under(const FqMatrix& t) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(t.apply(basis_.row_vector(i)))) return false;
  return true;
}

Subspace kernel(const FqMatrix& m) {
  const PrimeField f(m.modulus());
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.form.at(i, free));
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.modulus(), cols, gens);
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* where) {
  require_same_modulus(a.modulus(), b.modulus(), where);
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::ambient_mismatch,
                std::string(where) + ": ambient dimension " +
                    std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "intersect");
  const FqMatrix constraints = a.annihilator().basis().vstack(b.annihilator().basis());
  return kernel(constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "sum");
  return Subspace::from_matrix(a.basis().vstack(b.basis()));
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

std::uint64_t encode_vector(const Vector& v, Residue q) {
  std::uint64_t code = 0;
  for (Residue x : v) code = code * q + x;
  return code;
}

Vector decode_vector(std::uint64_t code, std::size_t n, Residue q) {
  Vector v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Residue>(code % q);
    code /= q;
  }
  return v;
}

std::uint64_t checked_space_size(Residue q, std::size_t n) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    size *= q;
  }
  return size;
}

std::string format_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace gonal
