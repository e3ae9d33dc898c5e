#pragma once

#include <json.hpp>

#include "cjac/classifier.hpp"
#include "cjac/deformation.hpp"
#include "cjac/semigroup.hpp"
#include "cjac/value_set.hpp"

namespace cjac {

/// {"elements": [...], "tail": n, "text": "{…}+[n,)"}; elements below `tail_at`.
nlohmann::ordered_json to_json(const ValueSet& v, int tail_at = -1);
nlohmann::ordered_json to_json(const NumericalSemigroup& s);
nlohmann::ordered_json to_json(const FlatLimit& limit, int v0);
nlohmann::ordered_json to_json(const MemberStatus& m, int v0);
nlohmann::ordered_json to_json(const Report27& r, int v0);
nlohmann::ordered_json to_json(const Report33& r);
nlohmann::ordered_json to_json(const Report38& r);
nlohmann::ordered_json to_json(const BoundaryReport& r);
nlohmann::ordered_json to_json(const Exhausted& e, int v0);

}  // namespace cjac
