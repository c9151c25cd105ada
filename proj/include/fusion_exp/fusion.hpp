#pragma once

// Fusion exponentiation: bases are n-tuples in G_p = G_q^n, exponents are
// elements of F_{q^n}. Component i of base^x is prod_j base_j^{lambda_{i,j}(x)}.

#include <cstddef>
#include <vector>

#include "fusion_exp/field.hpp"
#include "fusion_exp/group.hpp"

namespace fexp {

class FusionBase {
 public:
  /// Requires components.size() == field->n() and matching q.
  FusionBase(GroupParamsPtr group, FieldParamsPtr field,
             std::vector<GroupElement> components);

  static FusionBase identity(GroupParamsPtr group, FieldParamsPtr field);
  static FusionBase random(GroupParamsPtr group, FieldParamsPtr field,
                           Rng& rng);

  const GroupParamsPtr& group() const { return group_; }
  const FieldParamsPtr& field() const { return field_; }
  std::size_t size() const { return components_.size(); }
  const GroupElement& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<GroupElement>& components() const { return components_; }

  friend bool operator==(const FusionBase& a, const FusionBase& b) {
    return *a.field_ == *b.field_ && a.components_ == b.components_;
  }

 private:
  GroupParamsPtr group_;
  FieldParamsPtr field_;
  std::vector<GroupElement> components_;
};

/// (g^{x_0}, ..., g^{x_{n-1}}). Throws kIdentityBase for g = 1.
FusionBase scalar_embed(const GroupElement& g, const FieldElement& x);

/// (g, 1, ..., 1), i.e. g raised to the field's 1-element.
FusionBase unit_embed(const GroupElement& g, FieldParamsPtr field);

FusionBase fb_mul(const FusionBase& a, const FusionBase& b);
FusionBase fb_inv(const FusionBase& a);

FusionBase fusion_pow(const FusionBase& base, const FieldElement& exp,
                      OpCounter* counter = nullptr);

bool is_identity(const FusionBase& a);

inline FusionBase operator*(const FusionBase& a, const FusionBase& b) {
  return fb_mul(a, b);
}

}  // namespace fexp
