#pragma once

#include <json.hpp>

#include "subgrp/classify.hpp"
#include "subgrp/counting.hpp"
#include "subgrp/subgroup.hpp"

namespace subgrp {

inline void to_json(nlohmann::json& j, const SubgroupTriple& tr) {
  j = nlohmann::json{
      {"m", tr.ambient.m}, {"n", tr.ambient.n}, {"a", tr.a}, {"b", tr.b}, {"t", tr.t}};
}

inline void to_json(nlohmann::json& j, const InvariantFactors& f) {
  j = nlohmann::json{{"alpha", f.alpha},
                     {"beta", f.beta},
                     {"exponent", f.exponent},
                     {"cyclic", f.cyclic},
                     {"subproduct", f.subproduct}};
}

}  // namespace subgrp

namespace subgrp::counting {

inline void to_json(nlohmann::json& j, const CountQuery& q) {
  j = nlohmann::json{{"m", q.m}, {"n", q.n}, {"kind", to_string(q.kind)}};
  if (q.parameter) j["parameter"] = *q.parameter;
  else j["parameter"] = nullptr;
}

inline void to_json(nlohmann::json& j, const CountReport& rep) {
  j = nlohmann::json{
      {"query", rep.query}, {"value", rep.value}, {"variants", rep.variants}, {"agreed", rep.agreed}};
}

}  // namespace subgrp::counting
