#pragma once

// Oracle reductions between the standard and the fusion problems.
//
// Implemented arrows:
//   DLP   <= n-FDLP  (one fdlog query on (y,...,y) against (g,1,...,1))
//   n-FDLP <= DLP    (fdlog_solve, 2n dlog queries)
//   DHP   <= n-FDHP  (one fdh query on unit-embedded inputs)
//   DDP   <= n-FDDP  (one fddh query on unit-embedded inputs)
// plus the trivial adapters fdlog -> fdh -> fddh and dlog -> dh -> ddh.

#include <cstdint>
#include <string>
#include <vector>

#include "fusion_exp/dlp.hpp"
#include "fusion_exp/oracle.hpp"

namespace fexp {

/// Oracle handles for every problem; each carries its own call counter.
struct OracleSuite {
  DlogOracle dlog;
  FdlogOracle fdlog;
  DhOracle dh;
  FdhOracle fdh;
  DdhOracle ddh;
  FddhOracle fddh;
};

/// Oracles backed by exhaustive search (exact at desk scale).
OracleSuite make_bruteforce_suite();

/// Throws kOracleInconsistent if the fdlog answer is not of the form (x,...,x).
Int reduce_dlp_to_fdlp(const GroupElement& y, const GroupElement& g,
                       const FieldParamsPtr& field, const FdlogOracle& fdlog);

/// Throws kOracleInconsistent if trailing answer components are not 1.
GroupElement reduce_dhp_to_fdhp(const GroupElement& y1, const GroupElement& y2,
                                const GroupElement& g,
                                const FieldParamsPtr& field,
                                const FdhOracle& fdh);

bool reduce_ddp_to_fddp(const GroupElement& y1, const GroupElement& y2,
                        const GroupElement& y3, const GroupElement& g,
                        const FieldParamsPtr& field, const FddhOracle& fddh);

FdhOracle fdh_from_fdlog(FdlogOracle fdlog);
FddhOracle fddh_from_fdh(FdhOracle fdh);
DhOracle dh_from_dlog(DlogOracle dlog);
DdhOracle ddh_from_dh(DhOracle dh);

struct ArrowStats {
  std::string arrow;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t oracle_calls = 0;

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
  }
  double mean_oracle_calls() const {
    return trials == 0 ? 0.0 : static_cast<double>(oracle_calls) / trials;
  }
};

struct ReductionReport {
  std::vector<ArrowStats> arrows;

  const ArrowStats* find(const std::string& arrow) const;
  bool all_succeeded() const;
};

/// Runs `trials` seeded random instances through every arrow using
/// bruteforce-backed oracles. Requires q <= 2^16 and q^n <= 2^20.
/// trials == 0 yields an empty report.
ReductionReport run_reduction_matrix(const GroupParamsPtr& group,
                                     const FieldParamsPtr& field,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace fexp
