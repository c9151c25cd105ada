#pragma once

// The prime-order group G_q, realized as the order-q subgroup of (Z/PZ)^*.

#include <cstdint>
#include <memory>

#include "fusion_exp/bigint.hpp"
#include "fusion_exp/error.hpp"

namespace fexp {

class GroupParams;
using GroupParamsPtr = std::shared_ptr<const GroupParams>;

class GroupParams {
 public:
  const Int& modulus() const { return modulus_; }
  const Int& q() const { return q_; }
  const Int& generator() const { return generator_; }

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.modulus_ == b.modulus_ && a.q_ == b.q_ &&
           a.generator_ == b.generator_;
  }

 private:
  friend GroupParamsPtr make_group_params(const Int&, const Int&, const Int&);
  GroupParams(Int modulus, Int q, Int generator)
      : modulus_(std::move(modulus)), q_(std::move(q)),
        generator_(std::move(generator)) {}

  Int modulus_;
  Int q_;
  Int generator_;
};

/// Validates P, q prime, q | P-1, g != 1 and g^q = 1 (mod P).
GroupParamsPtr make_group_params(const Int& modulus, const Int& q,
                                 const Int& generator);

/// Safe-prime group: q of exactly q_bits bits with P = 2q+1 prime, and
/// g = h^2 mod P for the smallest h >= 2 with g != 1. Throws kSearchExhausted.
GroupParamsPtr gen_group_params(unsigned q_bits, std::uint64_t seed);

/// Counts group operations for complexity witnesses.
struct OpCounter {
  std::uint64_t mul = 0;
  std::uint64_t inv = 0;
};

class GroupElement {
 public:
  /// Checked construction: residue must lie in the order-q subgroup.
  GroupElement(GroupParamsPtr params, Int residue);

  /// Skips the membership test; the caller guarantees residue is in G_q.
  static GroupElement unchecked(GroupParamsPtr params, Int residue);
  static GroupElement identity(GroupParamsPtr params);
  static GroupElement generator(GroupParamsPtr params);

  const GroupParamsPtr& params() const { return params_; }
  const Int& residue() const { return residue_; }
  bool is_identity() const { return residue_ == 1; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.residue_ == b.residue_ && *a.params_ == *b.params_;
  }

 private:
  struct Unchecked {};
  GroupElement(Unchecked, GroupParamsPtr params, Int residue)
      : params_(std::move(params)), residue_(std::move(residue)) {}

  GroupParamsPtr params_;
  Int residue_;
};

GroupElement g_mul(const GroupElement& a, const GroupElement& b,
                   OpCounter* counter = nullptr);
GroupElement g_inv(const GroupElement& a, OpCounter* counter = nullptr);

/// Left-to-right square-and-multiply. exp is reduced mod q first, so negative
/// exponents are accepted. Uses at most 2*bitlen(q) multiplications.
GroupElement g_pow(const GroupElement& base, const Int& exp,
                   OpCounter* counter = nullptr);

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return g_mul(a, b);
}

void require_same_group(const GroupParams& a, const GroupParams& b);

}  // namespace fexp
