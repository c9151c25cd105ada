#include "fusion_exp/field.hpp"

#include <algorithm>
#include <utility>

#include "fusion_exp/rng.hpp"
#include "fusion_exp/zq_poly.hpp"

namespace fexp {

FieldParams::FieldParams(Int q, std::vector<Int> f_low)
    : q_(std::move(q)), f_low_(std::move(f_low)) {
  const std::size_t n = f_low_.size();
  mpz_pow_ui(order_.get_mpz_t(), q_.get_mpz_t(), n);

  // Row k holds X^{n+k} mod f. X^n = -sum f_i X^i, and each further power is
  // X times the previous row with its X^n overflow folded back in.
  if (n < 2) return;
  reduction_.assign((n - 1) * n, Int(0));
  for (std::size_t i = 0; i < n; ++i) reduction_[i] = mod(-f_low_[i], q_);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const Int* prev = &reduction_[(k - 1) * n];
    Int* row = &reduction_[k * n];
    const Int& overflow = prev[n - 1];
    for (std::size_t i = 0; i < n; ++i) {
      Int shifted = i == 0 ? Int(0) : prev[i - 1];
      row[i] = mod(shifted - overflow * f_low_[i], q_);
    }
  }
}

FieldParamsPtr make_field_params(const Int& q, std::size_t n,
                                 std::vector<Int> f_low) {
  if (n < 1 || f_low.size() != n) {
    throw Error(ErrorCode::kBadDegree,
                "expected " + std::to_string(n) + " low coefficients, got " +
                    std::to_string(f_low.size()));
  }
  if (!is_prime(q)) throw Error(ErrorCode::kNotPrime, to_decimal(q));
  for (const auto& c : f_low) {
    if (c < 0 || c >= q) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modulus coefficient out of range: " + to_decimal(c));
    }
  }
  std::vector<Int> monic = f_low;
  monic.emplace_back(1);
  if (!is_irreducible(q, monic)) {
    throw Error(ErrorCode::kNotIrreducible,
                "modulus polynomial factors over Z_" + to_decimal(q));
  }
  return FieldParamsPtr(new FieldParams(q, std::move(f_low)));
}

bool is_irreducible(const Int& q, std::span<const Int> poly) {
  if (!is_prime(q)) throw Error(ErrorCode::kNotPrime, to_decimal(q));
  zq::Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = mod(c, q);
  zq::trim(f);
  if (f.size() < 2 || f.back() != 1) {
    throw Error(ErrorCode::kBadDegree, "expected a monic polynomial of degree >= 1");
  }
  const auto n = static_cast<std::size_t>(zq::degree(f));
  if (n == 1) return true;

  // f is irreducible iff it shares no factor with X^{q^i} - X for i <= n/2.
  const zq::Poly x{Int(0), Int(1)};
  zq::Poly frobenius = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    frobenius = zq::powmod(frobenius, q, f, q);
    zq::Poly g = zq::gcd(f, zq::sub(frobenius, x, q), q);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<Int> find_irreducible(const Int& q, std::size_t n,
                                  std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kBadDegree, "degree must be >= 1");
  if (!is_prime(q)) throw Error(ErrorCode::kNotPrime, to_decimal(q));
  Rng rng(seed);
  std::vector<Int> candidate(n + 1, Int(0));
  candidate[n] = 1;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) candidate[i] = rng.below(q);
    if (n > 1 && candidate[0] == 0) continue;
    if (is_irreducible(q, candidate)) {
      candidate.pop_back();
      return candidate;
    }
  }
}

void require_same_field(const FieldParams& a, const FieldParams& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorCode::kParamsMismatch, "field parameters differ");
  }
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldParamsPtr params, std::vector<Int> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
  if (!params_) throw Error(ErrorCode::kInvalidArgument, "null field params");
  if (coeffs_.size() != params_->n()) {
    throw Error(ErrorCode::kBadDegree,
                "field element needs " + std::to_string(params_->n()) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c = mod(c, params_->q());
}

FieldElement FieldElement::zero(FieldParamsPtr params) {
  const std::size_t n = params->n();
  return FieldElement(std::move(params), std::vector<Int>(n, Int(0)));
}

FieldElement FieldElement::one(FieldParamsPtr params) {
  std::vector<Int> c(params->n(), Int(0));
  c[0] = 1;
  return FieldElement(std::move(params), std::move(c));
}

FieldElement FieldElement::from_index(FieldParamsPtr params, const Int& index) {
  if (index < 0 || index >= params->order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "index outside the field: " + to_decimal(index));
  }
  std::vector<Int> c(params->n());
  Int rest = index;
  for (auto& digit : c) {
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                params->q().get_mpz_t());
  }
  return FieldElement(std::move(params), std::move(c));
}

FieldElement FieldElement::random(FieldParamsPtr params, Rng& rng) {
  std::vector<Int> c(params->n());
  for (auto& x : c) x = rng.below(params->q());
  return FieldElement(std::move(params), std::move(c));
}

FieldElement FieldElement::random_nonzero(FieldParamsPtr params, Rng& rng) {
  for (;;) {
    FieldElement x = random(params, rng);
    if (!x.is_zero()) return x;
  }
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

LambdaMatrix::LambdaMatrix(FieldParamsPtr params, std::vector<Int> entries)
    : params_(std::move(params)), entries_(std::move(entries)) {
  if (entries_.size() != params_->n() * params_->n()) {
    throw Error(ErrorCode::kBadDegree, "lambda matrix must be n x n");
  }
  for (auto& e : entries_) e = mod(e, params_->q());
}

FieldElement LambdaMatrix::apply(const FieldElement& x) const {
  require_same_field(*params_, *x.params());
  const std::size_t size = n();
  std::vector<Int> z(size, Int(0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) z[i] += at(i, j) * x[j];
  }
  return FieldElement(params_, std::move(z));
}

LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b) {
  require_same_field(*a.params_, *b.params_);
  std::vector<Int> sum(a.entries_.size());
  for (std::size_t k = 0; k < sum.size(); ++k) {
    sum[k] = a.entries_[k] + b.entries_[k];
  }
  return LambdaMatrix(a.params_, std::move(sum));
}

LambdaMatrix lambda_matrix(const FieldElement& y) {
  const auto& params = y.params();
  const std::size_t n = params->n();
  std::vector<Int> entries(n * n, Int(0));
  // The plain product has coefficient z_m = sum_{j+k=m} x_j y_k. Terms with
  // m < n land directly in row m; terms with m >= n are spread over the rows
  // by the reduced form of X^m.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Int& entry = entries[i * n + j];
      if (i >= j) entry = y[i - j];
      for (std::size_t m = std::max(n, j); m + 1 < 2 * n && m - j < n; ++m) {
        entry += params->reduced_power(m - n, i) * y[m - j];
      }
    }
  }
  return LambdaMatrix(params, std::move(entries));
}

// ---------------------------------------------------------------------------

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.params(), *b.params());
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return FieldElement(a.params(), std::move(c));
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.params(), *b.params());
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return FieldElement(a.params(), std::move(c));
}

FieldElement fe_neg(const FieldElement& a) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
  return FieldElement(a.params(), std::move(c));
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.params(), *b.params());
  return lambda_matrix(b).apply(a);
}

FieldElement fe_inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroInverse, "zero has no inverse");
  const auto& params = a.params();
  const Int& q = params->q();

  zq::Poly f = params->f_low();
  f.emplace_back(1);
  zq::Poly r0 = f;
  zq::Poly r1 = a.coeffs();
  zq::trim(r1);
  zq::Poly s0;
  zq::Poly s1{Int(1)};
  while (!r1.empty()) {
    zq::Poly quot, rem;
    zq::divmod(r0, r1, q, quot, rem);
    zq::Poly s2 = zq::sub(s0, zq::mul(quot, s1, q), q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the (constant) gcd; scale the Bezout coefficient to make it 1.
  Int scale;
  if (r0.size() != 1 || !inv_mod(scale, r0[0], q)) {
    throw Error(ErrorCode::kZeroInverse, "element shares a factor with f");
  }
  std::vector<Int> c(params->n(), Int(0));
  zq::Poly s = zq::rem(s0, f, q);
  for (std::size_t i = 0; i < s.size(); ++i) c[i] = s[i] * scale;
  return FieldElement(params, std::move(c));
}

MixingReport lambda_mixing_report(const FieldElement& y) {
  const LambdaMatrix lambda = lambda_matrix(y);
  const std::size_t n = lambda.n();
  MixingReport report;
  for (const auto& e : lambda.entries()) {
    if (e == 0) ++report.zero_entry_count;
  }
  if (n == 1) return report;

  // Irreducible iff the nonzero pattern is strongly connected: every node is
  // reachable from node 0 along edges and along reversed edges.
  auto reaches_all = [&](bool reversed) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        const Int& e = reversed ? lambda.at(v, u) : lambda.at(u, v);
        if (!seen[v] && e != 0) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return std::find(seen.begin(), seen.end(), false) == seen.end();
  };
  report.is_reducible = !(reaches_all(false) && reaches_all(true));
  return report;
}

}  // namespace fexp
