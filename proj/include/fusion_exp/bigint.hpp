#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace fexp {

/// Arbitrary precision integer used for every residue, exponent and modulus.
using Int = mpz_class;

/// Least non-negative residue of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Modular inverse; returns false if a is not invertible modulo m.
inline bool inv_mod(Int& out, const Int& a, const Int& m) {
  return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

inline std::size_t bit_length(const Int& a) {
  if (a == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline bool test_bit(const Int& a, std::size_t i) {
  return mpz_tstbit(a.get_mpz_t(), i) != 0;
}

inline std::string to_decimal(const Int& a) { return a.get_str(10); }

/// Strict decimal parser: one or more ASCII digits, nothing else.
bool parse_decimal(std::string_view text, Int& out);

struct IntHash {
  std::size_t operator()(const Int& a) const noexcept {
    const auto* z = a.get_mpz_t();
    if (mpz_size(z) == 0) return 0;
    auto h = static_cast<std::size_t>(mpz_getlimbn(z, 0));
    return h ^ (mpz_size(z) * 0x9e3779b97f4a7c15ULL);
  }
};

}  // namespace fexp
