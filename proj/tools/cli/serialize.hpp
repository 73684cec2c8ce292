#pragma once

#include "phicert/criteria.hpp"
#include "phicert/oracle.hpp"
#include "phicert/polygon.hpp"

#include <json.hpp>

namespace phicert::cli {

using Json = nlohmann::ordered_json;

Json to_json(const NewtonPolygon& np, std::optional<Prime> prime = std::nullopt);
Json to_json(const std::vector<Edge>& edges);
Json to_json(const Certificate& cert);
Json to_json(const Factorization& f);
Json to_json(const SieveOutcome& s);
Json to_json(const PhiExpansion& e);

/// Verdict as a single word, "ExclusionWindow" for windows.
std::string verdict_name(const Json& certificate);

}  // namespace phicert::cli
