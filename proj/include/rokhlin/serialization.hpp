#ifndef ROKHLIN_SERIALIZATION_HPP
#define ROKHLIN_SERIALIZATION_HPP

#include "rokhlin/aperiodicity.hpp"
#include "rokhlin/chain_search.hpp"
#include "rokhlin/conjugation.hpp"
#include "rokhlin/dynamics.hpp"
#include "rokhlin/tower.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace rokhlin {

using Json = nlohmann::ordered_json;

/// Exact rationals are strings; a `<key>_decimal` shadow carries a double.
void put_rational(Json& obj, const std::string& key, const Rational& r);

Json to_json(const IntervalSet& s);
Json to_json(const SystemSpec& sys);
Json to_json(const PreservationReport& r);
Json to_json(const DefectReport& r);
Json to_json(const ChainCertificate& c);
Json to_json(const TowerVerification& v);
Json to_json(const TowerReport& r);
Json to_json(const ConjugacyPair& p);

/// Parses a system document. Syntax errors raise ParseError with the byte
/// offset; structural and semantic errors raise ParseError with the JSON
/// pointer of the offending value; bad rational strings raise FormatError.
SystemSpec parse_system(const std::string& text);
SystemSpec load_system(const std::filesystem::path& path);

/// `[["lo","hi"], ...]`, normalized. `where` prefixes error messages.
IntervalSet interval_set_from_json(const Json& j, const std::string& where = "");

/// level_index,interval_lo,interval_hi
std::string levels_csv(const TowerVerification& v);

}  // namespace rokhlin

#endif  // ROKHLIN_SERIALIZATION_HPP
