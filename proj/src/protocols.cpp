#include "fusion_exp/protocols.hpp"

#include <set>

namespace fexp {
namespace {

void require_nonidentity(const FusionBase& base) {
  if (is_identity(base)) {
    throw Error(ErrorCode::kIdentityBase, "protocol base must not be 1");
  }
}

}  // namespace

FusionKeyPair fdh_keygen(const FusionBase& base, Rng& rng) {
  require_nonidentity(base);
  FieldElement secret = FieldElement::random_nonzero(base.field(), rng);
  FusionBase pub = fusion_pow(base, secret);
  return {std::move(secret), std::move(pub)};
}

FusionBase fdh_shared(const FusionKeyPair& mine,
                      const FusionBase& their_public) {
  return fusion_pow(their_public, mine.secret);
}

ElGamalCiphertext felgamal_encrypt(const FusionBase& base,
                                   const FusionBase& public_key,
                                   const FusionBase& msg, Rng& rng) {
  return felgamal_encrypt_with_nonce(
      base, public_key, msg, FieldElement::random_nonzero(base.field(), rng));
}

ElGamalCiphertext felgamal_encrypt_with_nonce(const FusionBase& base,
                                              const FusionBase& public_key,
                                              const FusionBase& msg,
                                              const FieldElement& nonce) {
  require_nonidentity(base);
  require_same_field(*base.field(), *msg.field());
  require_same_field(*base.field(), *public_key.field());
  if (nonce.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "ElGamal nonce must be nonzero");
  }
  return {fusion_pow(base, nonce), fb_mul(msg, fusion_pow(public_key, nonce))};
}

FusionBase felgamal_decrypt(const FieldElement& secret,
                            const ElGamalCiphertext& ct) {
  return fb_mul(ct.c2, fb_inv(fusion_pow(ct.c1, secret)));
}

FieldElement vss_eval_point(const FieldParamsPtr& field, std::size_t j) {
  if (j == 0) throw Error(ErrorCode::kInvalidArgument, "share index must be >= 1");
  return FieldElement::from_index(field, Int(static_cast<unsigned long>(j)));
}

VssDealing vss_deal(const FieldElement& secret, std::size_t t, std::size_t m,
                    const FusionBase& base, Rng& rng) {
  require_nonidentity(base);
  require_same_field(*secret.params(), *base.field());
  const auto& field = base.field();
  if (t < 1 || t > m || Int(static_cast<unsigned long>(m)) >= field->order()) {
    throw Error(ErrorCode::kBadThreshold,
                "need 1 <= t <= m <= q^n - 1 (t=" + std::to_string(t) +
                    ", m=" + std::to_string(m) + ")");
  }

  std::vector<FieldElement> coeffs{secret};
  for (std::size_t i = 1; i < t; ++i) {
    coeffs.push_back(FieldElement::random(field, rng));
  }

  VssDealing dealing{t, m, base, {}, {}};
  for (const auto& a : coeffs) dealing.commitments.push_back(fusion_pow(base, a));
  for (std::size_t j = 1; j <= m; ++j) {
    const FieldElement alpha = vss_eval_point(field, j);
    FieldElement value = FieldElement::zero(field);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      value = value * alpha + *it;
    }
    dealing.shares.push_back({j, std::move(value)});
  }
  return dealing;
}

bool vss_verify_share(const VssDealing& dealing, const VssShare& share) {
  const auto& field = dealing.base.field();
  const FieldElement alpha = vss_eval_point(field, share.index);
  // base^{a(alpha)} must equal prod_i C_i^{alpha^i}.
  FusionBase expected = FusionBase::identity(dealing.base.group(), field);
  FieldElement power = FieldElement::one(field);
  for (const auto& c : dealing.commitments) {
    expected = fb_mul(expected, fusion_pow(c, power));
    power = power * alpha;
  }
  return fusion_pow(dealing.base, share.value) == expected;
}

bool vss_verify(const VssDealing& dealing, std::size_t j) {
  for (const auto& s : dealing.shares) {
    if (s.index == j) return vss_verify_share(dealing, s);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no share with index " + std::to_string(j));
}

FieldElement vss_reconstruct(std::span<const VssShare> shares) {
  if (shares.empty()) {
    throw Error(ErrorCode::kBadThreshold, "no shares to reconstruct from");
  }
  std::set<std::size_t> seen;
  for (const auto& s : shares) {
    if (!seen.insert(s.index).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate share index " + std::to_string(s.index));
    }
  }
  const auto& field = shares.front().value.params();
  std::vector<FieldElement> points;
  points.reserve(shares.size());
  for (const auto& s : shares) points.push_back(vss_eval_point(field, s.index));

  // a(0) = sum_j y_j * prod_{k != j} alpha_k / (alpha_k - alpha_j).
  FieldElement secret = FieldElement::zero(field);
  for (std::size_t j = 0; j < shares.size(); ++j) {
    FieldElement num = FieldElement::one(field);
    FieldElement den = FieldElement::one(field);
    for (std::size_t k = 0; k < shares.size(); ++k) {
      if (k == j) continue;
      num = num * points[k];
      den = den * (points[k] - points[j]);
    }
    secret = secret + shares[j].value * num * fe_inv(den);
  }
  return secret;
}

FieldElement vss_reconstruct_verified(const VssDealing& dealing,
                                      std::span<const VssShare> shares) {
  if (shares.size() < dealing.threshold) {
    throw Error(ErrorCode::kBadThreshold,
                "need " + std::to_string(dealing.threshold) + " shares, got " +
                    std::to_string(shares.size()));
  }
  for (const auto& s : shares) {
    if (!vss_verify_share(dealing, s)) throw VerifyFailedError(s.index);
  }
  return vss_reconstruct(shares);
}

}  // namespace fexp
