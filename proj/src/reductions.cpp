#include "fusion_exp/reductions.hpp"

#include <functional>

#include "fusion_exp/rng.hpp"

namespace fexp {
namespace {

// (y, 1, ..., 1); unlike unit_embed, y = 1 is allowed here.
FusionBase embed_first(const GroupElement& y, const FieldParamsPtr& field) {
  std::vector<GroupElement> c(field->n(), GroupElement::identity(y.params()));
  c[0] = y;
  return FusionBase(y.params(), field, std::move(c));
}

void require_base(const GroupElement& g) {
  if (g.is_identity()) {
    throw Error(ErrorCode::kIdentityBase, "reduction base must not be 1");
  }
}

FusionBase random_nonidentity_base(const GroupParamsPtr& group,
                                   const FieldParamsPtr& field, Rng& rng) {
  for (;;) {
    FusionBase b = FusionBase::random(group, field, rng);
    if (!is_identity(b)) return b;
  }
}

}  // namespace

OracleSuite make_bruteforce_suite() {
  OracleSuite s;
  s.dlog = make_bruteforce_dlog_oracle();
  s.fdlog = make_bruteforce_fdlog_oracle();
  s.dh = dh_from_dlog(make_bruteforce_dlog_oracle());
  s.fdh = fdh_from_fdlog(make_bruteforce_fdlog_oracle());
  s.ddh = ddh_from_dh(dh_from_dlog(make_bruteforce_dlog_oracle()));
  s.fddh = fddh_from_fdh(fdh_from_fdlog(make_bruteforce_fdlog_oracle()));
  return s;
}

Int reduce_dlp_to_fdlp(const GroupElement& y, const GroupElement& g,
                       const FieldParamsPtr& field, const FdlogOracle& fdlog) {
  require_base(g);
  const FusionBase target(y.params(), field,
                          std::vector<GroupElement>(field->n(), y));
  const FieldElement answer = fdlog(unit_embed(g, field), target);
  for (std::size_t i = 1; i < answer.size(); ++i) {
    if (answer[i] != answer[0]) {
      throw Error(ErrorCode::kOracleInconsistent,
                  "fdlog answer is not a constant tuple");
    }
  }
  return answer[0];
}

GroupElement reduce_dhp_to_fdhp(const GroupElement& y1, const GroupElement& y2,
                                const GroupElement& g,
                                const FieldParamsPtr& field,
                                const FdhOracle& fdh) {
  require_base(g);
  const FusionBase answer =
      fdh(unit_embed(g, field), embed_first(y1, field), embed_first(y2, field));
  for (std::size_t i = 1; i < answer.size(); ++i) {
    if (!answer[i].is_identity()) {
      throw Error(ErrorCode::kOracleInconsistent,
                  "fdh answer has non-trivial trailing components");
    }
  }
  return answer[0];
}

bool reduce_ddp_to_fddp(const GroupElement& y1, const GroupElement& y2,
                        const GroupElement& y3, const GroupElement& g,
                        const FieldParamsPtr& field, const FddhOracle& fddh) {
  require_base(g);
  return fddh(unit_embed(g, field), embed_first(y1, field),
              embed_first(y2, field), embed_first(y3, field));
}

FdhOracle fdh_from_fdlog(FdlogOracle fdlog) {
  return FdhOracle([fdlog = std::move(fdlog)](const FusionBase& g,
                                              const FusionBase& y1,
                                              const FusionBase& y2) {
    return fusion_pow(y2, fdlog(g, y1));
  });
}

FddhOracle fddh_from_fdh(FdhOracle fdh) {
  return FddhOracle([fdh = std::move(fdh)](
                        const FusionBase& g, const FusionBase& y1,
                        const FusionBase& y2, const FusionBase& y3) {
    return fdh(g, y1, y2) == y3;
  });
}

DhOracle dh_from_dlog(DlogOracle dlog) {
  return DhOracle([dlog = std::move(dlog)](const GroupElement& g,
                                           const GroupElement& y1,
                                           const GroupElement& y2) {
    return g_pow(y2, dlog(g, y1));
  });
}

DdhOracle ddh_from_dh(DhOracle dh) {
  return DdhOracle([dh = std::move(dh)](
                       const GroupElement& g, const GroupElement& y1,
                       const GroupElement& y2, const GroupElement& y3) {
    return dh(g, y1, y2) == y3;
  });
}

const ArrowStats* ReductionReport::find(const std::string& arrow) const {
  for (const auto& a : arrows) {
    if (a.arrow == arrow) return &a;
  }
  return nullptr;
}

bool ReductionReport::all_succeeded() const {
  for (const auto& a : arrows) {
    if (a.successes != a.trials) return false;
  }
  return true;
}

ReductionReport run_reduction_matrix(const GroupParamsPtr& group,
                                     const FieldParamsPtr& field,
                                     std::uint64_t trials, std::uint64_t seed) {
  if (group->q() != field->q()) {
    throw Error(ErrorCode::kParamsMismatch, "group and field q differ");
  }
  if (group->q() > (1 << 16) ||
      field->order() > Int(static_cast<unsigned long>(kFdlogBruteforceCap))) {
    throw Error(ErrorCode::kCapExceeded,
                "reduction matrix needs q <= 2^16 and q^n <= 2^20");
  }
  ReductionReport report;
  if (trials == 0) return report;

  Rng rng(seed);
  const Int& q = group->q();
  const GroupElement g = GroupElement::generator(group);

  // Each arrow runs `trials` instances; `body` returns whether the reduction
  // answered correctly and the oracle's call count is read afterwards.
  auto run = [&](const std::string& name, auto make_oracle, auto body) {
    ArrowStats stats{name, trials, 0, 0};
    auto oracle = make_oracle();
    for (std::uint64_t t = 0; t < trials; ++t) {
      bool ok = false;
      try {
        ok = body(oracle);
      } catch (const Error&) {
        ok = false;
      }
      if (ok) ++stats.successes;
    }
    stats.oracle_calls = oracle.calls();
    report.arrows.push_back(stats);
  };

  run("DLP<=n-FDLP", make_bruteforce_fdlog_oracle, [&](const FdlogOracle& o) {
    const Int x = rng.below(q);
    return reduce_dlp_to_fdlp(g_pow(g, x), g, field, o) == x;
  });

  run("n-FDLP<=DLP", make_bruteforce_dlog_oracle, [&](const DlogOracle& o) {
    const FusionBase base = random_nonidentity_base(group, field, rng);
    const FieldElement x = FieldElement::random(field, rng);
    return fdlog_solve(base, fusion_pow(base, x), o) == x;
  });

  run("DHP<=n-FDHP",
      [] { return fdh_from_fdlog(make_bruteforce_fdlog_oracle()); },
      [&](const FdhOracle& o) {
        const Int x1 = rng.below(q);
        const Int x2 = rng.below(q);
        return reduce_dhp_to_fdhp(g_pow(g, x1), g_pow(g, x2), g, field, o) ==
               g_pow(g, x1 * x2);
      });

  run("DDP<=n-FDDP",
      [] {
        return fddh_from_fdh(fdh_from_fdlog(make_bruteforce_fdlog_oracle()));
      },
      [&](const FddhOracle& o) {
        const Int x1 = rng.below(q);
        const Int x2 = rng.below(q);
        const Int x3 = rng.below(2) == 0 ? mod(x1 * x2, q) : rng.below(q);
        const bool expected = mod(x1 * x2 - x3, q) == 0;
        return reduce_ddp_to_fddp(g_pow(g, x1), g_pow(g, x2), g_pow(g, x3), g,
                                  field, o) == expected;
      });

  run("n-FDHP<=n-FDLP", make_bruteforce_fdlog_oracle,
      [&](const FdlogOracle& o) {
        const FdhOracle fdh = fdh_from_fdlog(o);
        const FusionBase base = random_nonidentity_base(group, field, rng);
        const FieldElement x1 = FieldElement::random(field, rng);
        const FieldElement x2 = FieldElement::random(field, rng);
        return fdh(base, fusion_pow(base, x1), fusion_pow(base, x2)) ==
               fusion_pow(base, x1 * x2);
      });

  run("n-FDDP<=n-FDHP",
      [] { return fdh_from_fdlog(make_bruteforce_fdlog_oracle()); },
      [&](const FdhOracle& o) {
        const FddhOracle fddh = fddh_from_fdh(o);
        const FusionBase base = random_nonidentity_base(group, field, rng);
        const FieldElement x1 = FieldElement::random(field, rng);
        const FieldElement x2 = FieldElement::random(field, rng);
        const FieldElement x3 = rng.below(2) == 0
                                    ? x1 * x2
                                    : FieldElement::random(field, rng);
        return fddh(base, fusion_pow(base, x1), fusion_pow(base, x2),
                    fusion_pow(base, x3)) == (x3 == x1 * x2);
      });

  run("DHP<=DLP", make_bruteforce_dlog_oracle, [&](const DlogOracle& o) {
    const DhOracle dh = dh_from_dlog(o);
    const Int x1 = rng.below(q);
    const Int x2 = rng.below(q);
    return dh(g, g_pow(g, x1), g_pow(g, x2)) == g_pow(g, x1 * x2);
  });

  run("DDP<=DHP", [] { return dh_from_dlog(make_bruteforce_dlog_oracle()); },
      [&](const DhOracle& o) {
        const DdhOracle ddh = ddh_from_dh(o);
        const Int x1 = rng.below(q);
        const Int x2 = rng.below(q);
        const Int x3 = rng.below(2) == 0 ? mod(x1 * x2, q) : rng.below(q);
        return ddh(g, g_pow(g, x1), g_pow(g, x2), g_pow(g, x3)) ==
               (mod(x1 * x2 - x3, q) == 0);
      });

  return report;
}

}  // namespace fexp
