#pragma once

// JSON shapes shared by the CLI and the table driver. Field names are part of
// the output contract (docs/json-schema.md); nlohmann::json keeps object
// keys sorted, so dumps are deterministic.

#include <json.hpp>

#include "constamax/aqecc.hpp"
#include "constamax/blockcodes.hpp"
#include "constamax/convolutional.hpp"
#include "constamax/cosets.hpp"
#include "constamax/distance.hpp"

namespace constamax {

using Json = nlohmann::json;

Json field_json(const Field& f);
Json profile_json(const CosetProfile& p);
Json partition_json(const CosetPartition& part);
Json code_json(const ConstacyclicCode& code);
Json certificate_json(const DistanceCertificate& cert);
Json conv_json(const ConvCode& cc);
Json aqecc_json(const AqeccRecord& rec);

/// "(n, k, gamma; m, df)" with df written as a range when not pinned down.
std::string conv_display(const ConvTuple& t);
std::string block_display(uint64_t n, uint64_t k, const DistanceCertificate& d);

}  // namespace constamax
