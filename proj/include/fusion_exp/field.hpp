#pragma once

// Exact arithmetic in the extension field F_{q^n} = Z_q[X]/(f).
//
// Elements are coefficient vectors (x_0, ..., x_{n-1}), index i holding the
// coefficient of X^i. Multiplication is expressed through the lambda matrix:
// for a fixed multiplier y, the i-th coefficient of x*y mod f is
//     z_i = sum_j x_j * lambda_{i,j}(y),
// where each lambda_{i,j} is linear in the coefficients of y. The same matrix
// drives fusion exponentiation, so fe_mul is deliberately routed through it.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fusion_exp/bigint.hpp"
#include "fusion_exp/error.hpp"

namespace fexp {

class Rng;
class FieldParams;
using FieldParamsPtr = std::shared_ptr<const FieldParams>;

/// Validated description of F_{q^n}. Immutable once built.
class FieldParams {
 public:
  const Int& q() const { return q_; }
  std::size_t n() const { return f_low_.size(); }
  /// f_0 .. f_{n-1}; the leading X^n coefficient is an implicit 1.
  const std::vector<Int>& f_low() const { return f_low_; }
  const Int& order() const { return order_; }

  /// Coefficient of X^i in X^{n+k} mod f, for k in [0, n-2].
  const Int& reduced_power(std::size_t k, std::size_t i) const {
    return reduction_[k * n() + i];
  }

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.q_ == b.q_ && a.f_low_ == b.f_low_;
  }

 private:
  friend FieldParamsPtr make_field_params(const Int&, std::size_t,
                                          std::vector<Int>);
  FieldParams(Int q, std::vector<Int> f_low);

  Int q_;
  std::vector<Int> f_low_;
  Int order_;
  std::vector<Int> reduction_;
};

/// Builds F_{q^n} with modulus X^n + sum f_i X^i.
/// Throws kNotPrime, kNotIrreducible, kBadDegree or kInvalidArgument.
FieldParamsPtr make_field_params(const Int& q, std::size_t n,
                                 std::vector<Int> f_low);

/// True iff the monic polynomial `poly` (little-endian, leading 1 included)
/// is irreducible over Z_q. Uses gcd(poly, X^{q^i} - X) for i <= deg/2.
bool is_irreducible(const Int& q, std::span<const Int> poly);

/// Monic irreducible polynomial of degree n, returned without its leading
/// coefficient. Deterministic in (q, n, seed).
std::vector<Int> find_irreducible(const Int& q, std::size_t n,
                                  std::uint64_t seed);

class FieldElement {
 public:
  /// Coefficients are reduced into [0, q); length must equal params->n().
  FieldElement(FieldParamsPtr params, std::vector<Int> coeffs);

  static FieldElement zero(FieldParamsPtr params);
  static FieldElement one(FieldParamsPtr params);
  /// Base-q digits of index, least significant first. index < q^n.
  static FieldElement from_index(FieldParamsPtr params, const Int& index);
  static FieldElement random(FieldParamsPtr params, Rng& rng);
  static FieldElement random_nonzero(FieldParamsPtr params, Rng& rng);

  const FieldParamsPtr& params() const { return params_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.params_ == *b.params_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldParamsPtr params_;
  std::vector<Int> coeffs_;
};

/// n x n matrix of lambda_{i,j}(y) values over Z_q, row-major.
class LambdaMatrix {
 public:
  LambdaMatrix(FieldParamsPtr params, std::vector<Int> entries);

  std::size_t n() const { return params_->n(); }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * n() + j];
  }
  const std::vector<Int>& entries() const { return entries_; }
  const FieldParamsPtr& params() const { return params_; }

  /// Matrix-vector product Lambda * x (mod q).
  FieldElement apply(const FieldElement& x) const;

  friend LambdaMatrix operator+(const LambdaMatrix& a, const LambdaMatrix& b);
  friend bool operator==(const LambdaMatrix& a, const LambdaMatrix& b) {
    return *a.params_ == *b.params_ && a.entries_ == b.entries_;
  }

 private:
  FieldParamsPtr params_;
  std::vector<Int> entries_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
/// Throws kZeroInverse for the zero element.
FieldElement fe_inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return fe_add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return fe_sub(a, b);
}
inline FieldElement operator-(const FieldElement& a) { return fe_neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return fe_mul(a, b);
}

LambdaMatrix lambda_matrix(const FieldElement& y);

struct MixingReport {
  std::size_t zero_entry_count = 0;
  /// Simultaneous row/column permutation reaches block-triangular form.
  bool is_reducible = false;
};

MixingReport lambda_mixing_report(const FieldElement& y);

/// Throws kParamsMismatch unless both parameter sets describe the same field.
void require_same_field(const FieldParams& a, const FieldParams& b);

}  // namespace fexp
