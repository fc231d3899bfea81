/*
   Copyright 2026 The trcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TRCERT_SERIALIZE_HPP
#define TRCERT_SERIALIZE_HPP

#include <string>
#include <variant>

#include "json.hpp"
#include "trcert/census.hpp"
#include "trcert/constructions.hpp"
#include "trcert/integrality.hpp"
#include "trcert/positivity.hpp"

namespace trcert {

using Json = nlohmann::ordered_json;

// All *_from_json functions throw ParseError on malformed input.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

Json to_json(const FieldTower& t);
FieldTower tower_from_json(const Json& j);

// Nested [lo, hi] arrays down to the base coefficient list.
Json to_json(const AlgNum& a);
AlgNum element_from_json(const FieldTower& t, const Json& j);

Json to_json(const IntervalSpec& i);
IntervalSpec interval_from_json(const Json& j);

using Certificate = std::variant<UnitPairCert, Sum32Cert, XWitnessCert, FourSquaresCert>;

std::string certificate_kind(const Certificate& c);
// Tower the payload elements are written in.
FieldTower certificate_tower(const Certificate& c);
Json payload_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& kind, const FieldTower& tower, const Json& payload);
VerifyReport verify_certificate(const Certificate& c);

struct Envelope {
    std::string kind;
    Certificate cert;
    Json provenance;
    Json status;  // {"state": "unverified" | "pass" | "fail", "clause": ...}
};

inline constexpr const char* kSchemaVersion = "1";
std::string builder_version();

// timestamp empty means none is recorded.
Envelope make_envelope(Certificate c, const std::string& timestamp);
Json to_json(const Envelope& e);
Envelope envelope_from_json(const Json& j);
Json status_json(const VerifyReport& r);

Json to_json(const VerifyReport& r);
Json to_json(const CensusTable& t);
Json to_json(const KroneckerEntry& k);
Json to_json(const CompletenessReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const ResidueWitness& w);
Json to_json(const UnitEvidence& u);

}  // namespace trcert

#endif
