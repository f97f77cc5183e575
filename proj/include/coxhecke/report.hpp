#pragma once

#include <string>

#include <json.hpp>

#include "coxhecke/afun.hpp"
#include "coxhecke/jring.hpp"

namespace coxhecke {

using Json = nlohmann::ordered_json;

// Structured-text instance description; infinity encoded as 0.
// {"generators": [names], "matrix": [[..]], "weights": [..],
//  "radius": int | "full"}
struct InstanceDesc {
  CoxeterSystem system;
  GroupTable::Radius radius = GroupTable::Radius::Full();
};
InstanceDesc parse_instance(const Json& j);

std::string word_string(const GroupTable& t, EltIndex x);

Json group_json(const GroupTable& t);
Json kl_json(const KLContext& kl);
Json mu_json(const KLContext& kl);
Json cells_json(const CellData& cells);
std::string cells_dot(const CellData& cells, CellKind kind);
Json afun_json(const AFun& af);
Json jring_json(const JRing& j);
Json conjectures_json(const std::vector<ConjectureResult>& results);

}  // namespace coxhecke
