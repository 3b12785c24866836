#pragma once

#include <nlohmann/json.hpp>

#include "specpair/flags.hpp"
#include "specpair/oracle.hpp"

namespace specpair {

using Json = nlohmann::json;

// Serialization. Keys are emitted in alphabetical order (nlohmann's default
// object ordering), optional fields are omitted when absent, fractions are
// always reduced {"num","den"} pairs. Serializing a parsed canonical
// document reproduces it byte for byte.
Json to_json(const Rat& r);
Json to_json(const Cluster& c);
Json to_json(const Gamma& g);
Json to_json(const Flag& f);
Json to_json(const PairVerdict& v);
Json to_json(const PeriodicZeroSet& zs);
Json to_json(const ZeroSetReport& r);
Json to_json(const RationalClassPartition& p);
Json to_json(const RationalityCertificate& cert);
Json to_json(const DenominatorBound& b);
Json to_json(const NoApplicableFlag& n);
Json to_json(const SpectralityVerdict& v);
Json to_json(const EnumerationResult& r);

// Parsing with schema validation; all throw InvalidInput on violations.
Rat rat_from_json(const Json& j);
Cluster cluster_from_json(const Json& j);
Gamma gamma_from_json(const Json& j);
Flag flag_from_json(const Json& j);
RationalityCertificate certificate_from_json(const Json& j);
SpectralityVerdict spectrality_from_json(const Json& j);

}  // namespace specpair
