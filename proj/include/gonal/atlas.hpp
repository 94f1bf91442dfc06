#pragma once

// Maximal subgroups (hyperplanes) of the homology group Z_q^n, their orbits
// under the adapted action, cores, and Galois-closure descriptors.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gonal/adapted_action.hpp"
#include "gonal/bigint.hpp"
#include "gonal/fq.hpp"
#include "gonal/params.hpp"

namespace gonal {

// Default guard on q^n for anything that walks the whole space: 3^13.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1594323;

/// An index-q subgroup of Z_q^n, stored as the dual normal h with
/// ker h = {x : h·x = 0}. Normals are scaled so the first nonzero entry is 1.
class Hyperplane {
 public:
  static Hyperplane from_normal(Vector normal, Residue modulus);
  // Throws invalid-parameters unless `s` has codimension exactly one.
  static Hyperplane from_subspace(const Subspace& s);

  const Vector& normal() const { return normal_; }
  Residue modulus() const { return modulus_; }
  std::size_t ambient_dim() const { return normal_.size(); }

  Subspace kernel() const;
  Residue evaluate(const Vector& x) const;
  bool contains(const Vector& x) const { return evaluate(x) == 0; }

  bool operator==(const Hyperplane&) const = default;
  auto operator<=>(const Hyperplane& o) const { return normal_ <=> o.normal_; }

 private:
  Hyperplane(Vector normal, Residue modulus) : normal_(std::move(normal)), modulus_(modulus) {}
  Vector normal_;
  Residue modulus_;
};

// All (q^n - 1)/(q - 1) hyperplanes in lexicographic order of normals.
void for_each_hyperplane(const CoverParams& params, std::uint64_t cap,
                         const std::function<void(const Hyperplane&)>& visit);
std::vector<Hyperplane> enumerate_hyperplanes(const CoverParams& params,
                                              std::uint64_t cap = kDefaultEnumerationCap);

enum class Conjugation {
  // h -> h·T^-1, so the new kernel is T·ker(h).
  kernel_image,
  // h -> h·T, the opposite labelling of the same orbits.
  opposite,
};

Hyperplane conjugate_hyperplane(const Hyperplane& h, const AdaptedAction& action,
                                Conjugation convention = Conjugation::kernel_image);

// h, h', h'', ... until the sequence closes; size p when gcd(p, q-1) = 1.
std::vector<Hyperplane> hyperplane_orbit(const Hyperplane& h, const AdaptedAction& action,
                                         Conjugation convention = Conjugation::kernel_image);

// Intersection of the kernels of every conjugate of h.
Subspace core(const Hyperplane& h, const AdaptedAction& action);

struct OrbitClass {
  // Lexicographically least normal in the orbit; also members.front().
  Hyperplane representative;
  std::vector<Hyperplane> members;
  Subspace core;
  std::size_t core_dim() const { return core.dim(); }
};

struct AtlasOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;  // 0 = hardware concurrency
  Conjugation convention = Conjugation::kernel_image;
};

// The t orbit classes ordered by representative. Output does not depend on
// the thread count.
std::vector<OrbitClass> orbit_classes(const AdaptedAction& action, const AtlasOptions& options = {});

// Number of k-dimensional subspaces of F_q^n (Gaussian binomial).
BigInt gaussian_count(unsigned n, unsigned k, unsigned q);

// Oracle: every k-dimensional subspace of F_q^n, built by extending
// (k-1)-dimensional ones one vector at a time and deduplicating.
std::vector<Subspace> enumerate_subgroups_brute(unsigned n, unsigned k, Residue q,
                                                std::uint64_t cap = 1u << 20);

struct GaloisReport {
  CoverParams params;
  Hyperplane hyperplane;
  bool is_composite_galois = false;
  std::size_t core_dim = 0;
  // Rank of the kernel N = Z_q^k of the Galois group Z_q^k ⋊ Z_p.
  std::size_t k = 0;
  std::string group;  // "Z_q^k ⋊ Z_p"
  BigInt group_order;
  bool order_congruence = false;  // q^k = 1 mod p
  bool exceeds_p_minus_1 = false;
};

// Throws invariant-hyperplane if h is fixed by the action, which cannot
// happen for valid parameters.
GaloisReport galois_closure(const Hyperplane& h, const AdaptedAction& action);

std::string semidirect_descriptor(unsigned q, std::size_t k, unsigned p);

// One word such as "a_9 a_12^2" as an exponent vector. Symbols a_1 ...
// a_{p(r-2)}; a_{jp} stands for -(a_{(j-1)p+1} + ... + a_{jp-1}).
Vector parse_word(std::string_view word, const CoverParams& params);

// A fixture: one word per line, '#' starts a comment.
Subspace parse_generator_words(std::string_view text, const CoverParams& params);

}  // namespace gonal
