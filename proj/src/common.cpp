#include <algorithm>

#include "fusion_exp/bigint.hpp"
#include "fusion_exp/error.hpp"
#include "fusion_exp/rng.hpp"

namespace fexp {

bool parse_decimal(std::string_view text, Int& out) {
  if (text.empty()) return false;
  if (!std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  return out.set_str(std::string(text), 10) == 0;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kBadDegree: return "BadDegree";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParamsMismatch: return "ParamsMismatch";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kIdentityBase: return "IdentityBase";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kOracleFailure: return "OracleFailure";
    case ErrorCode::kOracleInconsistent: return "OracleInconsistent";
    case ErrorCode::kBadThreshold: return "BadThreshold";
    case ErrorCode::kVerifyFailed: return "VerifyFailed";
    case ErrorCode::kUnsupportedN: return "UnsupportedN";
    case ErrorCode::kFormat: return "Format";
  }
  return "Unknown";
}

Int Rng::below(const Int& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  if (bound == 1) return 0;
  const std::size_t bits = bit_length(bound - 1);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  for (;;) {
    Int candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = engine_();
      if (w == 0) word &= top_mask;
      Int limb;
      mpz_import(limb.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate = (candidate << 64) + limb;
    }
    if (candidate < bound) return candidate;
  }
}

}  // namespace fexp
