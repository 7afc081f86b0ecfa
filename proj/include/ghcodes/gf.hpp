#pragma once

#include <cstdint>
#include <vector>

#include "ghcodes/errors.hpp"

namespace ghcodes {

/// Element of GF(p^m), encoded as the base-p packing of its coefficient
/// vector over the residue-class basis 1, w, w^2, ... (little-endian).
/// The index doubles as the wire form, so serialized matrices are plain
/// integer grids.
struct FieldElement {
  std::uint32_t index = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic context for GF(p^m) with p prime and p^m <= 2^20.
///
/// Multiplication and powering run on exp/log tables built from the first
/// primitive element in index order. Moduli are fixed per field (Conway
/// polynomials for GF(8), GF(27), GF(64); smallest-index monic irreducible
/// otherwise), so element indices are stable across runs.
///
/// Immutable after construction; all operations are pure and the context
/// can be shared freely between threads.
class FieldCtx {
 public:
  FieldCtx(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t size() const { return size_; }
  /// Monic modulus polynomial, little-endian coefficients, length m+1.
  const std::vector<int>& modulus() const { return modulus_; }
  FieldElement generator() const { return {gen_}; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  bool is_zero(FieldElement a) const { return a.index == 0; }

  /// Bounds-checked element from its integer index.
  FieldElement element(std::uint32_t idx) const {
    if (idx >= size_) throw ParamsOutOfRange("element index out of range");
    return {idx};
  }

  /// Embeds an integer as the prime-field constant c mod p.
  FieldElement from_int(long long c) const {
    long long r = c % p_;
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.index ^ b.index};
    if (!add_table_.empty()) return {add_table_[a.index * size_ + b.index]};
    return add_slow(a, b);
  }

  FieldElement neg(FieldElement a) const {
    if (p_ == 2) return a;
    return mul(a, from_int(p_ - 1));
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.index == 0 || b.index == 0) return {0};
    return {exp_[log_[a.index] + log_[b.index]]};
  }

  FieldElement inv(FieldElement a) const {
    if (a.index == 0) throw DivisionByZero("inv(0)");
    return {exp_[size_ - 1 - log_[a.index]]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// a^e, any integer e; pow(a,-1) = inv(a), pow(a,0) = 1.
  FieldElement pow(FieldElement a, long long e) const {
    if (a.index == 0) {
      if (e > 0) return {0};
      if (e == 0) return {1};
      throw DivisionByZero("pow(0, e<0)");
    }
    long long ord = size_ - 1;
    long long k = ((log_[a.index] % ord) * (e % ord)) % ord;
    if (k < 0) k += ord;
    return {exp_[k]};
  }

  /// Discrete log base the table generator; element must be nonzero.
  std::uint32_t log(FieldElement a) const {
    if (a.index == 0) throw DivisionByZero("log(0)");
    return log_[a.index];
  }

 private:
  FieldElement add_slow(FieldElement a, FieldElement b) const;
  void build_tables();

  int p_ = 0, m_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t gen_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> exp_;   // doubled length to skip the mod in mul
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_table_;  // only for small odd-characteristic fields
};

}  // namespace ghcodes
