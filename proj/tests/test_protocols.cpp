#include <doctest.h>

#include "fusion_exp/protocols.hpp"
#include "test_support.hpp"

using namespace fexp;
using testing::code_of;
using testing::fb;
using testing::fe;

namespace {

FusionBase toy_base() {
  auto g = testing::toy_group();
  return unit_embed(GroupElement(g, Int(2)), testing::toy_field());
}

FusionKeyPair pair_for(const FusionBase& base, const FieldElement& secret) {
  return {secret, fusion_pow(base, secret)};
}

std::vector<VssShare> subset(const std::vector<VssShare>& shares, unsigned mask) {
  std::vector<VssShare> out;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    if (mask >> i & 1) out.push_back(shares[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("Diffie-Hellman worked example") {
  auto base = toy_base();
  auto f = base.field();
  auto a = pair_for(base, fe(f, {3, 5}));
  auto b = pair_for(base, fe(f, {2, 0}));
  CHECK(fe(f, {3, 5}) * fe(f, {2, 0}) == fe(f, {6, 10}));
  auto expect = fusion_pow(base, fe(f, {6, 10}));
  CHECK(fdh_shared(a, b.public_key) == expect);
  CHECK(fdh_shared(b, a.public_key) == expect);
  // base = (2, 1), so the shared value is (2^6, 2^10) mod 23.
  CHECK(expect == fb(base.group(), f, {oracle::iterated_pow(2, 6, 23),
                                       oracle::iterated_pow(2, 10, 23)}));

  auto unit = pair_for(base, FieldElement::one(f));
  CHECK(fdh_shared(a, unit.public_key) == a.public_key);
}

TEST_CASE("Diffie-Hellman agreement") {
  Rng rng(1);
  std::vector<FusionBase> bases{toy_base()};
  for (std::size_t n : {1u, 3u, 5u}) {
    auto g = testing::toy_group();
    bases.push_back(testing::random_nonidentity(g, testing::field_for(11, n), rng));
  }
  auto big = testing::big_group();
  bases.push_back(testing::random_nonidentity(big, testing::field_for(big->q(), 2), rng));
  for (const auto& base : bases) {
    for (int t = 0; t < 1000; ++t) {
      auto a = fdh_keygen(base, rng);
      auto b = fdh_keygen(base, rng);
      REQUIRE_FALSE(a.secret.is_zero());
      REQUIRE(a.public_key == fusion_pow(base, a.secret));
      REQUIRE(fdh_shared(a, b.public_key) == fdh_shared(b, a.public_key));
      if (t >= 100 && base.group()->q() > 1000) break;
    }
  }
  Rng r1(9), r2(9);
  CHECK(fdh_keygen(toy_base(), r1).secret == fdh_keygen(toy_base(), r2).secret);

  auto g = testing::toy_group();
  CHECK(code_of([&] { fdh_keygen(FusionBase::identity(g, testing::toy_field()), rng); }) ==
        ErrorCode::kIdentityBase);
}

TEST_CASE("ElGamal roundtrip") {
  Rng rng(2);
  auto base = toy_base();
  for (int t = 0; t < 1000; ++t) {
    auto keys = felgamal_keygen(base, rng);
    auto msg = FusionBase::random(base.group(), base.field(), rng);
    auto ct = felgamal_encrypt(base, keys.public_key, msg, rng);
    REQUIRE(felgamal_decrypt(keys.secret, ct) == msg);
  }

  auto g = testing::toy_group();
  auto f3 = testing::field_for(11, 3);
  auto base3 = testing::random_nonidentity(g, f3, rng);
  for (int t = 0; t < 200; ++t) {
    auto keys = felgamal_keygen(base3, rng);
    auto msg = FusionBase::random(g, f3, rng);
    REQUIRE(felgamal_decrypt(keys.secret, felgamal_encrypt(base3, keys.public_key, msg, rng)) ==
            msg);
  }
}

TEST_CASE("ElGamal nonce handling") {
  auto base = toy_base();
  auto f = base.field();
  auto keys = pair_for(base, fe(f, {3, 5}));
  auto msg = fb(base.group(), f, {4, 8});
  CHECK(code_of([&] {
          felgamal_encrypt_with_nonce(base, keys.public_key, msg, FieldElement::zero(f));
        }) == ErrorCode::kInvalidArgument);

  auto k = fe(f, {1, 7});
  auto ct = felgamal_encrypt_with_nonce(base, keys.public_key, msg, k);
  CHECK(ct.c1 == fusion_pow(base, k));
  CHECK(ct.c2 == msg * fusion_pow(keys.public_key, k));
  CHECK(felgamal_decrypt(keys.secret, ct) == msg);

  auto other = make_field_params(11, 2, {3, 0});
  CHECK(code_of([&] {
          felgamal_decrypt(fe(other, {1, 1}), ct);
        }) == ErrorCode::kParamsMismatch);
}

TEST_CASE("ElGamal with n=1 is textbook ElGamal") {
  for (auto grp : {testing::toy_group(), testing::big_group()}) {
    auto f1 = make_field_params(grp->q(), 1, {0});
    auto gen = GroupElement::generator(grp);
    auto base = FusionBase(grp, f1, {gen});
    Rng rng(3);
    for (int t = 0; t < 1000; ++t) {
      Int x = 1 + rng.below(grp->q() - 1);
      Int k = 1 + rng.below(grp->q() - 1);
      auto m = g_pow(gen, rng.below(grp->q()));
      // Scalar reference: (g^k, m * (g^x)^k), decrypted as c2 / c1^x.
      const Int P = grp->modulus();
      Int y, c1, c2, s, s_inv;
      mpz_powm(y.get_mpz_t(), gen.residue().get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
      mpz_powm(c1.get_mpz_t(), gen.residue().get_mpz_t(), k.get_mpz_t(), P.get_mpz_t());
      mpz_powm(s.get_mpz_t(), y.get_mpz_t(), k.get_mpz_t(), P.get_mpz_t());
      c2 = mod(m.residue() * s, P);

      auto keys = pair_for(base, FieldElement(f1, {x}));
      REQUIRE(keys.public_key[0].residue() == y);
      auto ct = felgamal_encrypt_with_nonce(base, keys.public_key, FusionBase(grp, f1, {m}),
                                            FieldElement(f1, {k}));
      REQUIRE(ct.c1[0].residue() == c1);
      REQUIRE(ct.c2[0].residue() == c2);
      mpz_powm(s.get_mpz_t(), c1.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
      REQUIRE(inv_mod(s_inv, s, P));
      REQUIRE(felgamal_decrypt(keys.secret, ct)[0].residue() == mod(c2 * s_inv, P));
      if (t >= 200 && grp->q() > 1000) break;
    }
  }
}

TEST_CASE("VSS evaluation points") {
  auto f = testing::toy_field();
  CHECK(vss_eval_point(f, 1) == fe(f, {1, 0}));
  CHECK(vss_eval_point(f, 11) == fe(f, {0, 1}));
  CHECK(vss_eval_point(f, 12) == fe(f, {1, 1}));
  CHECK(vss_eval_point(f, 120) == fe(f, {10, 10}));
  CHECK(code_of([&] { vss_eval_point(f, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { vss_eval_point(f, 121); }).has_value());
}

TEST_CASE("VSS worked example t=2, m=3") {
  auto base = toy_base();
  auto f = base.field();
  Rng rng(4);
  auto secret = fe(f, {7, 1});
  auto d = vss_deal(secret, 2, 3, base, rng);
  REQUIRE(d.shares.size() == 3);
  REQUIRE(d.commitments.size() == 2);
  CHECK(d.commitments[0] == fusion_pow(base, secret));

  // Degree-1 sharing: the slope through share 1 predicts the others.
  auto a1 = (d.shares[0].value - secret) * fe_inv(vss_eval_point(f, 1));
  for (const auto& s : d.shares) {
    CHECK(s.value == secret + a1 * vss_eval_point(f, s.index));
  }
  CHECK(d.commitments[1] == fusion_pow(base, a1));

  for (std::size_t j = 1; j <= 3; ++j) CHECK(vss_verify(d, j));
  for (unsigned mask = 1; mask < 8; ++mask) {
    auto s = subset(d.shares, mask);
    if (s.size() >= 2) {
      CHECK(vss_reconstruct(s) == secret);
      CHECK(vss_reconstruct_verified(d, s) == secret);
    } else {
      CHECK(code_of([&] { vss_reconstruct_verified(d, s); }) == ErrorCode::kBadThreshold);
    }
  }
}

TEST_CASE("VSS with t=1 is a constant polynomial") {
  auto base = toy_base();
  Rng rng(5);
  auto secret = fe(base.field(), {4, 9});
  auto d = vss_deal(secret, 1, 4, base, rng);
  for (const auto& s : d.shares) CHECK(s.value == secret);
  REQUIRE(d.commitments.size() == 1);
  CHECK(d.commitments[0] == fusion_pow(base, secret));
}

TEST_CASE("VSS completeness and correctness over all subsets, m <= 5") {
  Rng rng(6);
  auto g = testing::toy_group();
  for (std::size_t n : {1u, 2u, 3u}) {
    auto f = testing::field_for(11, n);
    auto base = testing::random_nonidentity(g, f, rng);
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t t = 1; t <= m; ++t) {
        auto secret = FieldElement::random(f, rng);
        auto d = vss_deal(secret, t, m, base, rng);
        for (std::size_t j = 1; j <= m; ++j) REQUIRE(vss_verify(d, j));
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
          auto s = subset(d.shares, mask);
          if (s.size() >= t) {
            REQUIRE(vss_reconstruct(s) == secret);
            REQUIRE(vss_reconstruct_verified(d, s) == secret);
          }
        }
      }
    }
  }
}

TEST_CASE("VSS corruption is detected at the corrupted index") {
  auto base = toy_base();
  auto f = base.field();
  Rng rng(7);
  auto secret = fe(f, {7, 1});
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t t = 1; t <= m; ++t) {
      auto d = vss_deal(secret, t, m, base, rng);
      for (std::size_t bad = 1; bad <= m; ++bad) {
        auto corrupt = d;
        corrupt.shares[bad - 1].value = corrupt.shares[bad - 1].value + fe(f, {1, 0});
        for (std::size_t j = 1; j <= m; ++j) REQUIRE(vss_verify(corrupt, j) == (j != bad));
        try {
          vss_reconstruct_verified(corrupt, corrupt.shares);
          FAIL("corruption not reported");
        } catch (const VerifyFailedError& e) {
          CHECK(e.index() == bad);
          CHECK(e.code() == ErrorCode::kVerifyFailed);
        }
      }
    }
  }

  // Any nonzero perturbation, not just (1,0), is caught.
  auto d = vss_deal(secret, 3, 5, base, rng);
  for (long i = 1; i < 121; ++i) {
    auto corrupt = d;
    corrupt.shares[2].value = corrupt.shares[2].value + FieldElement::from_index(f, Int(i));
    REQUIRE_FALSE(vss_verify(corrupt, 3));
  }
}

TEST_CASE("exponent addition law used by verification") {
  Rng rng(8);
  auto base = toy_base();
  auto big = testing::big_group();
  auto big_base = testing::random_nonidentity(big, testing::field_for(big->q(), 3), rng);
  for (const auto& b : {base, big_base}) {
    for (int t = 0; t < 300; ++t) {
      auto x = FieldElement::random(b.field(), rng);
      auto y = FieldElement::random(b.field(), rng);
      REQUIRE(fusion_pow(b, x + y) == fusion_pow(b, x) * fusion_pow(b, y));
    }
  }
}

TEST_CASE("VSS argument checks") {
  auto base = toy_base();
  auto f = base.field();
  Rng rng(9);
  auto secret = fe(f, {1, 1});
  CHECK(code_of([&] { vss_deal(secret, 0, 3, base, rng); }) == ErrorCode::kBadThreshold);
  CHECK(code_of([&] { vss_deal(secret, 4, 3, base, rng); }) == ErrorCode::kBadThreshold);
  CHECK(code_of([&] { vss_deal(secret, 2, 121, base, rng); }) == ErrorCode::kBadThreshold);
  CHECK_FALSE(code_of([&] { vss_deal(secret, 2, 120, base, rng); }).has_value());
  CHECK(code_of([&] {
          vss_deal(secret, 1, 2, FusionBase::identity(base.group(), f), rng);
        }) == ErrorCode::kIdentityBase);

  auto d = vss_deal(secret, 2, 3, base, rng);
  std::vector<VssShare> dup{d.shares[0], d.shares[0]};
  CHECK(code_of([&] { vss_reconstruct(dup); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { vss_reconstruct(std::span<const VssShare>{}); }) ==
        ErrorCode::kBadThreshold);
}
