#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "tricompact/compactor.hpp"
#include "tricompact/decomposition.hpp"
#include "tricompact/drp.hpp"

namespace tricompact {

using Json = nlohmann::json;

Json to_json(const CheckRecord& r);
Json to_json(std::span<const CheckRecord> transcript);
Json to_json(const MinorOp& op);
Json to_json(const CompactorOutput& out);
Json to_json(const CompactionSequence& seq, std::span<const Vertex> protected_start);
Json to_json(const BlockTree& t);
Json to_json(const CutTree& t);
Json to_json(const DrpCertificate& cert);

// The inverse readers throw ParseError on malformed documents.
CompactorOutput output_from_json(const Json& j);

// Rebuilds the reduction from its vertex list against the instance's root
// graph and takes the rotation system as given. Throws ParseError, or
// InvalidPayload when the vertex list does not describe a reduction.
DrpCertificate certificate_from_json(const Json& j, const DrpInstance& inst);

Json read_json_file(const std::string& path);

}  // namespace tricompact
