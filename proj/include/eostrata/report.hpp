#pragma once

// JSON payloads, the hashed envelope, DOT Hasse diagrams and a plain text
// rendering for the command-line front end.  Payload keys are sorted (the
// default nlohmann::json object is a std::map), so identical input gives
// byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "eostrata/fzip.hpp"
#include "eostrata/ziporacle.hpp"
#include "eostrata/zipstrata.hpp"

namespace eostrata {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// "Q" for the rationals, "q:<q>" for F_q.
struct FieldSpec {
    int p = 0;  ///< 0 for Q
    int k = 1;
    bool rational() const { return p == 0; }
    long long order() const;
    std::string name() const;
};

FieldSpec parse_field(const std::string& s);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t h);

/// {schema_version, command, payload, payload_hash, timing_seconds}; the hash
/// covers payload.dump() only.
Json envelope(const std::string& command, const Json& payload, double seconds);

Json poset_payload(const StratumPoset& poset);
Json strata_payload(const CSpinReport& report);
Json types_payload(const TypeSchemeResult& result);
/// Runs the Clifford computations for the given coefficients over `field`.
Json clifford_payload(const std::vector<long long>& coeffs, const FieldSpec& field);
Json fzip_payload(const FZipClassification& cls);
Json oracle_payload(const ZipGroupDatum& datum, const OrbitClasses& classes);

/// Graphviz digraph built from the "strata" and "hasse" fields of a payload.
std::string hasse_dot(const Json& payload);
/// One "path: value" line per leaf.
std::string render_text(const Json& payload);

/// Names in `requested` whose check failed.  Throws std::invalid_argument for
/// a name the payload has no check for.
std::vector<std::string> failed_assertions(const Json& payload, const std::vector<std::string>& requested);

}  // namespace eostrata
