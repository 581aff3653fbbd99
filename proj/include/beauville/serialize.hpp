#pragma once

// JSON views of the report types.  Key order is fixed so identical inputs
// dump byte-identical documents.

#include <string>
#include <vector>

#include "json.hpp"

#include "beauville/cones.hpp"
#include "beauville/search.hpp"

namespace beauville {

using Json = nlohmann::ordered_json;

const char* direction_name(Direction direction);
Direction direction_from_name(const std::string& name);
const char* strategy_name(Strategy strategy);
Strategy strategy_from_name(const std::string& name);

Json to_json(const Certificate& cert);
// Inverse of to_json(Certificate); throws on missing fields or bad enum
// names.
Certificate certificate_from_json(const Json& j);

Json to_json(const VerifyResult& result);
Json to_json(const SearchReport& report);
Json to_json(const CohomRow& row);
Json to_json(const std::vector<CohomRow>& rows);
Json to_json(const SurfaceNumerics& numerics);
Json to_json(const ConeReport& report);
Json to_json(const ThreeCones& cones);
Json to_json(const Beauville5Row& row);
Json to_json(const Beauville5Report& report);

}  // namespace beauville
