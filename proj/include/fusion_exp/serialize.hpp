#pragma once

// JSON interchange formats. All integers travel as decimal strings.
//
//   FieldParams   {"q": "11", "n": 2, "f": ["1", "0"]}        (f_0 first)
//   FieldElement  ["3", "5"]
//   GroupParams   {"modulus": "23", "q": "11", "generator": "2"}
//   GroupElement  "13"
//   FusionBase    ["2", "4"]
//   SystemConfig  {"version": 1, "group": GroupParams, "field": FieldParams}
//
// Decoding failures raise Error with code kFormat; decoded values are fully
// validated (primality, irreducibility, subgroup membership).

#include <json.hpp>

#include "fusion_exp/field.hpp"
#include "fusion_exp/fusion.hpp"
#include "fusion_exp/group.hpp"
#include "fusion_exp/protocols.hpp"
#include "fusion_exp/reductions.hpp"

namespace fexp {

using Json = nlohmann::ordered_json;

inline constexpr int kSystemConfigVersion = 1;

struct SystemConfig {
  GroupParamsPtr group;
  FieldParamsPtr field;
  int version = kSystemConfigVersion;
};

/// Throws kParamsMismatch if the group and field disagree on q.
SystemConfig make_system_config(GroupParamsPtr group, FieldParamsPtr field);

Json to_json(const FieldParams& params);
Json to_json(const FieldElement& x);
Json to_json(const GroupParams& params);
Json to_json(const GroupElement& a);
Json to_json(const FusionBase& a);
Json to_json(const SystemConfig& config);
Json to_json(const ElGamalCiphertext& ct);
Json to_json(const VssDealing& dealing);
Json to_json(const ReductionReport& report);

FieldParamsPtr field_params_from_json(const Json& j);
FieldElement field_element_from_json(const Json& j, const FieldParamsPtr& field);
GroupParamsPtr group_params_from_json(const Json& j);
GroupElement group_element_from_json(const Json& j, const GroupParamsPtr& group);
FusionBase fusion_base_from_json(const Json& j, const SystemConfig& config);
SystemConfig system_config_from_json(const Json& j);

/// Parses text and forwards errors as kFormat.
Json parse_json(const std::string& text);

}  // namespace fexp
