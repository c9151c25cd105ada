#include "fusion_exp/serialize.hpp"

namespace fexp {
namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorCode::kFormat, what);
}

Int decimal_from_json(const Json& j, const char* what) {
  if (!j.is_string()) format_error(std::string(what) + ": expected decimal string");
  Int out;
  if (!parse_decimal(j.get<std::string>(), out)) {
    format_error(std::string(what) + ": malformed decimal '" +
                 j.get<std::string>() + "'");
  }
  return out;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) format_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) format_error(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Int> decimal_array(const Json& j, const char* what) {
  if (!j.is_array()) format_error(std::string(what) + ": expected an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(decimal_from_json(e, what));
  return out;
}

Json decimal_array(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

// Domain errors raised while validating decoded values become format errors
// at this boundary.
template <class F>
auto validated(const char* what, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kFormat) throw;
    format_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

SystemConfig make_system_config(GroupParamsPtr group, FieldParamsPtr field) {
  if (group->q() != field->q()) {
    throw Error(ErrorCode::kParamsMismatch,
                "group q " + to_decimal(group->q()) + " differs from field q " +
                    to_decimal(field->q()));
  }
  return SystemConfig{std::move(group), std::move(field), kSystemConfigVersion};
}

Json to_json(const FieldParams& params) {
  return Json{{"q", to_decimal(params.q())},
              {"n", params.n()},
              {"f", decimal_array(params.f_low())}};
}

Json to_json(const FieldElement& x) { return decimal_array(x.coeffs()); }

Json to_json(const GroupParams& params) {
  return Json{{"modulus", to_decimal(params.modulus())},
              {"q", to_decimal(params.q())},
              {"generator", to_decimal(params.generator())}};
}

Json to_json(const GroupElement& a) { return to_decimal(a.residue()); }

Json to_json(const FusionBase& a) {
  Json out = Json::array();
  for (const auto& c : a.components()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SystemConfig& config) {
  return Json{{"version", config.version},
              {"group", to_json(*config.group)},
              {"field", to_json(*config.field)}};
}

Json to_json(const ElGamalCiphertext& ct) {
  return Json{{"c1", to_json(ct.c1)}, {"c2", to_json(ct.c2)}};
}

Json to_json(const VssDealing& dealing) {
  Json shares = Json::array();
  for (const auto& s : dealing.shares) {
    shares.push_back(Json{{"index", s.index}, {"value", to_json(s.value)}});
  }
  Json commitments = Json::array();
  for (const auto& c : dealing.commitments) commitments.push_back(to_json(c));
  return Json{{"threshold", dealing.threshold},
              {"share_count", dealing.share_count},
              {"base", to_json(dealing.base)},
              {"shares", shares},
              {"commitments", commitments}};
}

Json to_json(const ReductionReport& report) {
  Json arrows = Json::array();
  for (const auto& a : report.arrows) {
    arrows.push_back(Json{{"arrow", a.arrow},
                          {"trials", a.trials},
                          {"successes", a.successes},
                          {"mean_oracle_calls", a.mean_oracle_calls()}});
  }
  return Json{{"arrows", arrows}};
}

FieldParamsPtr field_params_from_json(const Json& j) {
  const Int q = decimal_from_json(member(j, "q"), "field.q");
  const Json& n_json = member(j, "n");
  if (!n_json.is_number_unsigned()) format_error("field.n: expected integer");
  const auto n = n_json.get<std::size_t>();
  std::vector<Int> f = decimal_array(member(j, "f"), "field.f");
  return validated("field",
                   [&] { return make_field_params(q, n, std::move(f)); });
}

FieldElement field_element_from_json(const Json& j,
                                     const FieldParamsPtr& field) {
  std::vector<Int> c = decimal_array(j, "field element");
  if (c.size() != field->n()) {
    format_error("field element: expected " + std::to_string(field->n()) +
                 " coefficients");
  }
  for (const auto& x : c) {
    if (x >= field->q()) format_error("field element: coefficient >= q");
  }
  return FieldElement(field, std::move(c));
}

GroupParamsPtr group_params_from_json(const Json& j) {
  const Int modulus = decimal_from_json(member(j, "modulus"), "group.modulus");
  const Int q = decimal_from_json(member(j, "q"), "group.q");
  const Int g = decimal_from_json(member(j, "generator"), "group.generator");
  return validated("group", [&] { return make_group_params(modulus, q, g); });
}

GroupElement group_element_from_json(const Json& j,
                                     const GroupParamsPtr& group) {
  Int r = decimal_from_json(j, "group element");
  return validated("group element",
                   [&] { return GroupElement(group, std::move(r)); });
}

FusionBase fusion_base_from_json(const Json& j, const SystemConfig& config) {
  if (!j.is_array()) format_error("fusion base: expected an array");
  std::vector<GroupElement> c;
  for (const auto& e : j) c.push_back(group_element_from_json(e, config.group));
  return validated("fusion base", [&] {
    return FusionBase(config.group, config.field, std::move(c));
  });
}

SystemConfig system_config_from_json(const Json& j) {
  const Json& version = member(j, "version");
  if (!version.is_number_integer() ||
      version.get<int>() != kSystemConfigVersion) {
    format_error("unsupported config version");
  }
  auto group = group_params_from_json(member(j, "group"));
  auto field = field_params_from_json(member(j, "field"));
  return validated("config", [&] {
    return make_system_config(std::move(group), std::move(field));
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fexp
