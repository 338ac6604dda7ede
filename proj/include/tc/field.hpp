#pragma once
// Finite fields F_p and F_{p^k}.
//
// Elements are stored as their coefficient vector in the modulus root t,
// packed little-endian in base p: code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
// The same packing defines the total order used for "smallest" choices
// (smallest irreducible modulus, smallest root).

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace tc {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

class Field {
 public:
  // Prefer make_field(); this constructor trusts that `modulus` is monic
  // irreducible of degree >= 1 over F_p (coefficients low to high).
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return k_ == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // The class of t (0 in a prime field, whose modulus is t).
  Elem generator() const;
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  bool same_as(const Field& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_;
  int k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;  // k + 1 coefficients, monic
  // Discrete log tables for extension fields of moderate size.
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

// Lexicographically smallest monic irreducible of degree k over F_p, where
// candidates are compared by the packed code of their lower coefficients.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k);

// Field F_{p^k} with the modulus from find_irreducible. Throws
// Error(bad_char) for non-prime p or p >= 2^16 and Error(bad_extension) for
// k < 1 or p^k >= 2^32.
FieldPtr make_field(std::uint32_t p, int k);

// Ring embedding F_{p^k} -> F_{p^{km}} sending t to the smallest root of the
// source modulus in the target. Throws Error(field_mismatch) on
// incompatible characteristics or degrees.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);
  Elem operator()(Elem a) const;
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem image_of_generator() const { return root_; }

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elem root_;
  std::vector<Elem> root_powers_;
};

Elem embed(const Field& source, Elem a, const FieldPtr& target);

}  // namespace tc
