#include "fusion_exp/dlp.hpp"

#include <unordered_map>

#include "fusion_exp/rng.hpp"

namespace fexp {
namespace {

constexpr unsigned kRhoMaxRestarts = 1000;

void require_dlog_instance(const GroupElement& g, const GroupElement& y) {
  require_same_group(*g.params(), *y.params());
  if (g.is_identity()) {
    throw Error(ErrorCode::kIdentityBase, "discrete log base must not be 1");
  }
}

struct RhoState {
  GroupElement x;
  Int a;
  Int b;
};

}  // namespace

Int dlog_bruteforce(const GroupElement& g, const GroupElement& y,
                    std::uint64_t cap) {
  require_dlog_instance(g, y);
  const Int& q = g.params()->q();
  if (q > Int(static_cast<unsigned long>(cap))) {
    throw Error(ErrorCode::kCapExceeded,
                "q = " + to_decimal(q) + " exceeds bruteforce cap");
  }
  GroupElement cur = GroupElement::identity(g.params());
  for (Int x = 0; x < q; ++x) {
    if (cur == y) return x;
    cur = g_mul(cur, g);
  }
  throw Error(ErrorCode::kNotFound, "y is not a power of g");
}

Int dlog_bsgs(const GroupElement& g, const GroupElement& y,
              OpCounter* counter) {
  require_dlog_instance(g, y);
  const Int& q = g.params()->q();
  Int m;
  mpz_sqrt(m.get_mpz_t(), q.get_mpz_t());
  if (m * m < q) m += 1;
  const unsigned long steps = m.get_ui();

  // Baby steps g^j, j in [0, m).
  std::unordered_map<Int, unsigned long, IntHash> table;
  table.reserve(steps);
  GroupElement cur = GroupElement::identity(g.params());
  for (unsigned long j = 0; j < steps; ++j) {
    if (j > 0) cur = g_mul(cur, g, counter);
    table.emplace(cur.residue(), j);
  }
  const GroupElement giant = g_inv(g_mul(cur, g, counter), counter);

  // Giant steps y * g^{-im}.
  GroupElement gamma = y;
  for (unsigned long i = 0; i < steps; ++i) {
    if (auto it = table.find(gamma.residue()); it != table.end()) {
      return mod(Int(i) * m + it->second, q);
    }
    if (i + 1 < steps) gamma = g_mul(gamma, giant, counter);
  }
  throw Error(ErrorCode::kNotFound, "y is not a power of g");
}

Int dlog_pollard_rho(const GroupElement& g, const GroupElement& y,
                     std::uint64_t seed, OpCounter* counter) {
  require_dlog_instance(g, y);
  const Int& q = g.params()->q();
  if (q <= 3) {
    throw Error(ErrorCode::kInvalidArgument, "Pollard rho needs q > 3");
  }

  // Partition on residue mod 3: square, multiply by g, multiply by y.
  auto step = [&](RhoState& s) {
    const unsigned long part = mpz_fdiv_ui(s.x.residue().get_mpz_t(), 3);
    if (part == 0) {
      s.x = g_mul(s.x, s.x, counter);
      s.a = mod(s.a * 2, q);
      s.b = mod(s.b * 2, q);
    } else if (part == 1) {
      s.x = g_mul(s.x, g, counter);
      s.a = mod(s.a + 1, q);
    } else {
      s.x = g_mul(s.x, y, counter);
      s.b = mod(s.b + 1, q);
    }
  };

  for (unsigned restart = 0; restart < kRhoMaxRestarts; ++restart) {
    Rng rng(seed + restart);
    Int a0 = rng.below(q);
    Int b0 = rng.below(q);
    RhoState tortoise{
        g_mul(g_pow(g, a0, counter), g_pow(y, b0, counter), counter), a0, b0};
    RhoState hare = tortoise;
    do {
      step(tortoise);
      step(hare);
      step(hare);
    } while (!(tortoise.x == hare.x));

    // g^{a1} y^{b1} = g^{a2} y^{b2}  =>  (b1 - b2) x = a2 - a1 (mod q).
    const Int db = mod(tortoise.b - hare.b, q);
    if (db == 0) continue;
    Int db_inv;
    inv_mod(db_inv, db, q);
    Int x = mod((hare.a - tortoise.a) * db_inv, q);
    if (g_pow(g, x) == y) return x;
  }
  throw Error(ErrorCode::kOracleFailure, "Pollard rho exhausted its restarts");
}

FieldElement fdlog_solve(const FusionBase& base, const FusionBase& target,
                         const DlogOracle& dlog) {
  require_same_field(*base.field(), *target.field());
  require_same_group(*base.group(), *target.group());
  if (is_identity(base)) {
    throw Error(ErrorCode::kIdentityBase, "fusion log base must not be 1");
  }
  const GroupElement g = GroupElement::generator(base.group());
  const std::size_t n = base.size();
  std::vector<Int> w(n);
  std::vector<Int> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = dlog(g, base[i]);
    z[i] = dlog(g, target[i]);
  }
  const FieldElement wf(base.field(), std::move(w));
  const FieldElement zf(base.field(), std::move(z));
  if (wf.is_zero()) {
    throw Error(ErrorCode::kOracleInconsistent,
                "dlog oracle mapped a non-identity base to zero");
  }
  return fe_mul(zf, fe_inv(wf));
}

FieldElement fdlog_bruteforce(const FusionBase& base, const FusionBase& target,
                              std::uint64_t cap) {
  require_same_field(*base.field(), *target.field());
  if (is_identity(base)) {
    throw Error(ErrorCode::kIdentityBase, "fusion log base must not be 1");
  }
  const auto& field = base.field();
  if (field->order() > Int(static_cast<unsigned long>(cap))) {
    throw Error(ErrorCode::kCapExceeded,
                "q^n = " + to_decimal(field->order()) + " exceeds bruteforce cap");
  }
  for (Int index = 0; index < field->order(); ++index) {
    FieldElement e = FieldElement::from_index(field, index);
    if (fusion_pow(base, e) == target) return e;
  }
  throw Error(ErrorCode::kNotFound, "no exponent maps base to target");
}

DlogOracle make_bruteforce_dlog_oracle() {
  return DlogOracle([](const GroupElement& g, const GroupElement& y) {
    return dlog_bruteforce(g, y);
  });
}

DlogOracle make_bsgs_dlog_oracle() {
  return DlogOracle([](const GroupElement& g, const GroupElement& y) {
    return dlog_bsgs(g, y);
  });
}

DlogOracle make_rho_dlog_oracle(std::uint64_t seed) {
  return DlogOracle([seed](const GroupElement& g, const GroupElement& y) {
    return dlog_pollard_rho(g, y, seed);
  });
}

FdlogOracle make_bruteforce_fdlog_oracle() {
  return FdlogOracle([](const FusionBase& base, const FusionBase& target) {
    return fdlog_bruteforce(base, target);
  });
}

}  // namespace fexp
