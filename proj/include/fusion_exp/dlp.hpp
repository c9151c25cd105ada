#pragma once

// Discrete logarithms in G_q and fusion discrete logarithms in G_p.

#include <cstdint>

#include "fusion_exp/fusion.hpp"
#include "fusion_exp/oracle.hpp"

namespace fexp {

inline constexpr std::uint64_t kDlogBruteforceCap = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kFdlogBruteforceCap = std::uint64_t{1} << 20;

/// Linear scan over g^0, g^1, ... Throws kCapExceeded if q > cap.
Int dlog_bruteforce(const GroupElement& g, const GroupElement& y,
                    std::uint64_t cap = kDlogBruteforceCap);

/// Shanks baby-step giant-step with m = ceil(sqrt(q)) baby steps.
Int dlog_bsgs(const GroupElement& g, const GroupElement& y,
              OpCounter* counter = nullptr);

/// Pollard rho with a 3-way partition on residue mod 3 and Floyd cycle
/// detection. A degenerate collision restarts the walk with seed + 1.
Int dlog_pollard_rho(const GroupElement& g, const GroupElement& y,
                     std::uint64_t seed, OpCounter* counter = nullptr);

/// Solves base^x = target through 2n calls to `dlog`, all taken against the
/// group's generator: with w = dlog(base), z = dlog(target), x = z * w^{-1}.
FieldElement fdlog_solve(const FusionBase& base, const FusionBase& target,
                         const DlogOracle& dlog);

/// Exhaustive scan over F_{q^n}. Throws kCapExceeded if q^n > cap and
/// kNotFound if no exponent matches.
FieldElement fdlog_bruteforce(const FusionBase& base, const FusionBase& target,
                              std::uint64_t cap = kFdlogBruteforceCap);

DlogOracle make_bruteforce_dlog_oracle();
DlogOracle make_bsgs_dlog_oracle();
DlogOracle make_rho_dlog_oracle(std::uint64_t seed);
FdlogOracle make_bruteforce_fdlog_oracle();

}  // namespace fexp
