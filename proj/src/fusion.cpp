#include "fusion_exp/fusion.hpp"

#include <utility>

#include "fusion_exp/rng.hpp"

namespace fexp {

FusionBase::FusionBase(GroupParamsPtr group, FieldParamsPtr field,
                       std::vector<GroupElement> components)
    : group_(std::move(group)),
      field_(std::move(field)),
      components_(std::move(components)) {
  if (!group_ || !field_) {
    throw Error(ErrorCode::kInvalidArgument, "null parameters");
  }
  if (group_->q() != field_->q()) {
    throw Error(ErrorCode::kParamsMismatch,
                "group order " + to_decimal(group_->q()) +
                    " differs from field characteristic " +
                    to_decimal(field_->q()));
  }
  if (components_.size() != field_->n()) {
    throw Error(ErrorCode::kParamsMismatch,
                "fusion base needs " + std::to_string(field_->n()) +
                    " components, got " + std::to_string(components_.size()));
  }
  for (const auto& c : components_) require_same_group(*group_, *c.params());
}

FusionBase FusionBase::identity(GroupParamsPtr group, FieldParamsPtr field) {
  std::vector<GroupElement> ones(field->n(), GroupElement::identity(group));
  return FusionBase(std::move(group), std::move(field), std::move(ones));
}

FusionBase FusionBase::random(GroupParamsPtr group, FieldParamsPtr field,
                              Rng& rng) {
  const GroupElement g = GroupElement::generator(group);
  std::vector<GroupElement> c;
  c.reserve(field->n());
  for (std::size_t i = 0; i < field->n(); ++i) {
    c.push_back(g_pow(g, rng.below(group->q())));
  }
  return FusionBase(std::move(group), std::move(field), std::move(c));
}

FusionBase scalar_embed(const GroupElement& g, const FieldElement& x) {
  if (g.is_identity()) {
    throw Error(ErrorCode::kIdentityBase, "scalar embedding needs g != 1");
  }
  std::vector<GroupElement> c;
  c.reserve(x.size());
  for (const auto& xi : x.coeffs()) c.push_back(g_pow(g, xi));
  return FusionBase(g.params(), x.params(), std::move(c));
}

FusionBase unit_embed(const GroupElement& g, FieldParamsPtr field) {
  if (g.is_identity()) {
    throw Error(ErrorCode::kIdentityBase, "unit embedding needs g != 1");
  }
  std::vector<GroupElement> c(field->n(), GroupElement::identity(g.params()));
  c[0] = g;
  return FusionBase(g.params(), std::move(field), std::move(c));
}

FusionBase fb_mul(const FusionBase& a, const FusionBase& b) {
  require_same_field(*a.field(), *b.field());
  require_same_group(*a.group(), *b.group());
  std::vector<GroupElement> c;
  c.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(g_mul(a[i], b[i]));
  return FusionBase(a.group(), a.field(), std::move(c));
}

FusionBase fb_inv(const FusionBase& a) {
  std::vector<GroupElement> c;
  c.reserve(a.size());
  for (const auto& x : a.components()) c.push_back(g_inv(x));
  return FusionBase(a.group(), a.field(), std::move(c));
}

FusionBase fusion_pow(const FusionBase& base, const FieldElement& exp,
                      OpCounter* counter) {
  require_same_field(*base.field(), *exp.params());
  // Entries of Lambda are already reduced into [0, q), so a negative
  // coefficient such as -y_1 arrives as q - y_1.
  const LambdaMatrix lambda = lambda_matrix(exp);
  const std::size_t n = base.size();
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GroupElement acc = GroupElement::identity(base.group());
    for (std::size_t j = 0; j < n; ++j) {
      acc = g_mul(acc, g_pow(base[j], lambda.at(i, j), counter), counter);
    }
    out.push_back(std::move(acc));
  }
  return FusionBase(base.group(), base.field(), std::move(out));
}

bool is_identity(const FusionBase& a) {
  for (const auto& c : a.components()) {
    if (!c.is_identity()) return false;
  }
  return true;
}

}  // namespace fexp
