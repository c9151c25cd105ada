#pragma once

// Demonstration protocols in the fusion setting: Diffie-Hellman, ElGamal and
// Feldman-style verifiable secret sharing over F_{q^n}.

#include <cstddef>
#include <span>
#include <vector>

#include "fusion_exp/fusion.hpp"
#include "fusion_exp/rng.hpp"

namespace fexp {

struct FusionKeyPair {
  FieldElement secret;
  FusionBase public_key;
};

/// Secret drawn uniformly from nonzero field elements.
FusionKeyPair fdh_keygen(const FusionBase& base, Rng& rng);
FusionBase fdh_shared(const FusionKeyPair& mine, const FusionBase& their_public);

struct ElGamalCiphertext {
  FusionBase c1;
  FusionBase c2;
};

inline FusionKeyPair felgamal_keygen(const FusionBase& base, Rng& rng) {
  return fdh_keygen(base, rng);
}
ElGamalCiphertext felgamal_encrypt(const FusionBase& base,
                                   const FusionBase& public_key,
                                   const FusionBase& msg, Rng& rng);
/// Explicit nonce; a zero nonce is rejected with kInvalidArgument.
ElGamalCiphertext felgamal_encrypt_with_nonce(const FusionBase& base,
                                              const FusionBase& public_key,
                                              const FusionBase& msg,
                                              const FieldElement& nonce);
FusionBase felgamal_decrypt(const FieldElement& secret,
                            const ElGamalCiphertext& ct);

struct VssShare {
  std::size_t index;  // j in [1, m]
  FieldElement value;
};

struct VssDealing {
  std::size_t threshold;
  std::size_t share_count;
  FusionBase base;
  std::vector<VssShare> shares;
  std::vector<FusionBase> commitments;  // base^{a_i}, i = 0..t-1
};

/// Field element (j mod q, floor(j/q) mod q, ...). Requires 1 <= j < q^n.
FieldElement vss_eval_point(const FieldParamsPtr& field, std::size_t j);

/// Throws kBadThreshold unless 1 <= t <= m <= q^n - 1; kIdentityBase if the
/// base is the identity.
VssDealing vss_deal(const FieldElement& secret, std::size_t t, std::size_t m,
                    const FusionBase& base, Rng& rng);

/// Checks share j (1-based) against the commitments.
bool vss_verify(const VssDealing& dealing, std::size_t j);
bool vss_verify_share(const VssDealing& dealing, const VssShare& share);

/// Lagrange interpolation at zero. Requires at least one share and distinct
/// indices; gives the secret whenever at least t honest shares are supplied.
FieldElement vss_reconstruct(std::span<const VssShare> shares);

/// Verifies every supplied share first; throws VerifyFailedError naming the
/// first bad index, kBadThreshold if fewer than t shares are supplied.
FieldElement vss_reconstruct_verified(const VssDealing& dealing,
                                      std::span<const VssShare> shares);

}  // namespace fexp
