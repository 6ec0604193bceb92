#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sepcodes/admissibility.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/reductions.hpp"
#include "sepcodes/verify.hpp"

namespace sepcodes {

using Json = nlohmann::json;  // std::map-backed, so keys serialise sorted

Json to_json(const VertexSet& s);
Json to_json(const std::vector<Edge>& edges);

/// {"kind", "feasible", "number", "witness"}; number and witness are null when infeasible.
Json cover_json(std::string_view kind, const CoverResult& r);

Json to_json(const AdmissibilityReport& a);
Json to_json(const TheoremReport& r);
Json to_json(const Hypergraph& h);
Json to_json(const ReductionArtifact& art, const TestCoverInstance& inst);
Json to_json(const ForwardWitness& fw);
Json to_json(const IffResult& r);
Json to_json(const SpiderCheck& c);

/// Canonical serialisation used for every report: sorted keys, compact, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace sepcodes
