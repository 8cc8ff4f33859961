#pragma once

#include <string>

#include "json.hpp"

#include "ggt/cayley.hpp"
#include "ggt/constants.hpp"
#include "ggt/freesets.hpp"
#include "ggt/hypgeom.hpp"
#include "ggt/shortening.hpp"
#include "ggt/smallcancel.hpp"

namespace ggt {

using Json = nlohmann::ordered_json;

// Every report serialises with a fixed field order so identical inputs give
// byte-identical output.
Json to_json(const SCReport& rep, const Presentation& p);
Json to_json(const GrowthReport& rep);
Json to_json(const DeltaReport& rep);
Json to_json(const EnergyReport& rep, const Presentation& p);
Json to_json(const TranslationReport& rep);
Json to_json(const FellowTravelReport& rep, const Presentation& p);
Json to_json(const ReducedReport& rep, const Presentation& p);
Json to_json(const MovingFamily& fam, const Presentation& p);
Json to_json(const SCConditionReport& rep);
Json to_json(const ShorteningVerdict& v, const Presentation& p);
Json to_json(const ConstantsRecord& rec);
Json to_json(const PingpongConstants& pc);
Json interval_json(const Interval& iv);

std::string growth_csv(const GrowthReport& rep);
std::string shortfree_csv(const ShorteningFreeCounts& counts, std::uint64_t U_size);

// Published output schema for a CLI subcommand; minimal structural
// description used by the validation tests.
Json subcommand_schema(const std::string& name);

// Structural validation of a payload against subcommand_schema(name).
bool matches_schema(const Json& value, const Json& schema, std::string* why = nullptr);

}  // namespace ggt
