#include "fusion_exp/group.hpp"

#include <utility>

#include "fusion_exp/rng.hpp"

namespace fexp {
namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return mod(a * b, m); }

// Reference power used only for validation, not counted.
Int plain_pow(const Int& base, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

constexpr std::uint64_t kSafePrimeSearchCap = std::uint64_t{1} << 22;

}  // namespace

GroupParamsPtr make_group_params(const Int& modulus, const Int& q,
                                 const Int& generator) {
  if (!is_prime(modulus)) throw Error(ErrorCode::kNotPrime, to_decimal(modulus));
  if (!is_prime(q)) throw Error(ErrorCode::kNotPrime, to_decimal(q));
  if (mod(modulus - 1, q) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "q does not divide P - 1");
  }
  if (generator <= 1 || generator >= modulus) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator out of range: " + to_decimal(generator));
  }
  if (plain_pow(generator, q, modulus) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "generator does not have order q");
  }
  return GroupParamsPtr(new GroupParams(modulus, q, generator));
}

GroupParamsPtr gen_group_params(unsigned q_bits, std::uint64_t seed) {
  if (q_bits < 4) {
    throw Error(ErrorCode::kInvalidArgument, "q_bits must be at least 4");
  }
  Rng rng(seed);
  const Int low = Int(1) << (q_bits - 1);
  for (std::uint64_t attempt = 0; attempt < kSafePrimeSearchCap; ++attempt) {
    Int q = rng.range(low, low << 1);
    if (q % 2 == 0) q += 1;
    if (bit_length(q) != q_bits) continue;
    if (!is_prime(q)) continue;
    Int modulus = 2 * q + 1;
    if (!is_prime(modulus)) continue;
    for (Int h = 2;; ++h) {
      Int g = mulmod(h, h, modulus);
      if (g != 1) return make_group_params(modulus, q, g);
    }
  }
  throw Error(ErrorCode::kSearchExhausted,
              "no safe prime with " + std::to_string(q_bits) + " bits found");
}

void require_same_group(const GroupParams& a, const GroupParams& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorCode::kParamsMismatch, "group parameters differ");
  }
}

GroupElement::GroupElement(GroupParamsPtr params, Int residue)
    : params_(std::move(params)), residue_(std::move(residue)) {
  if (!params_) throw Error(ErrorCode::kInvalidArgument, "null group params");
  if (residue_ < 1 || residue_ >= params_->modulus() ||
      plain_pow(residue_, params_->q(), params_->modulus()) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                to_decimal(residue_) + " is not in the order-q subgroup");
  }
}

GroupElement GroupElement::unchecked(GroupParamsPtr params, Int residue) {
  return GroupElement(Unchecked{}, std::move(params), std::move(residue));
}

GroupElement GroupElement::identity(GroupParamsPtr params) {
  return unchecked(std::move(params), Int(1));
}

GroupElement GroupElement::generator(GroupParamsPtr params) {
  Int g = params->generator();
  return unchecked(std::move(params), std::move(g));
}

GroupElement g_mul(const GroupElement& a, const GroupElement& b,
                   OpCounter* counter) {
  require_same_group(*a.params(), *b.params());
  if (counter) ++counter->mul;
  return GroupElement::unchecked(
      a.params(), mulmod(a.residue(), b.residue(), a.params()->modulus()));
}

GroupElement g_inv(const GroupElement& a, OpCounter* counter) {
  if (counter) ++counter->inv;
  Int r;
  inv_mod(r, a.residue(), a.params()->modulus());
  return GroupElement::unchecked(a.params(), std::move(r));
}

GroupElement g_pow(const GroupElement& base, const Int& exp,
                   OpCounter* counter) {
  const auto& params = base.params();
  const Int e = mod(exp, params->q());
  const Int& m = params->modulus();
  const std::size_t bits = bit_length(e);
  if (bits == 0) return GroupElement::identity(params);

  Int acc = base.residue();
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc = mulmod(acc, acc, m);
    if (counter) ++counter->mul;
    if (test_bit(e, i)) {
      acc = mulmod(acc, base.residue(), m);
      if (counter) ++counter->mul;
    }
  }
  return GroupElement::unchecked(params, std::move(acc));
}

}  // namespace fexp
