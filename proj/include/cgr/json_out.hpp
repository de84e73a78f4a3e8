#pragma once

#include <json.hpp>

#include "cgr/constructions.hpp"
#include "cgr/finders.hpp"
#include "cgr/spectrum.hpp"
#include "cgr/stability.hpp"

namespace cgr {

// All emitted JSON carries "schema":"1" at top level; vertex ids are
// 1-indexed, matching the text format.
using Json = nlohmann::ordered_json;

Json cert_json(const CycleCertificate& c);
Json cert_json(const PathCertificate& p);
Json cert_json(const Matching& m);

Json spectrum_json(const SpectrumReport& rep, const TheoremVerdict* verdict);
Json arrows_json(const ArrowsResult& res, int len);

Json witness_json(const SparseSetWitness& w);
Json witness_json(const PartitionWitness& w);
Json structure_json(const GlueStructure& s);
SparseSetWitness sparse_witness_from_json(const Json& j);
PartitionWitness partition_witness_from_json(const Json& j);
GlueStructure structure_from_json(const Json& j);

Json stability_json(const StabilityCase& sc);
Json pipeline_json(const PipelineReport& rep);
Json expectations_json(const Expectations& e);

// Recursively collects every certificate object ({"type": "cycle"|"path"|
// "matching", ...}) found anywhere in the document.
struct AnyCertificate {
  enum Kind { Cycle, Path, Match } kind;
  CycleCertificate cycle;
  PathCertificate path;
  Matching matching;
};
std::vector<AnyCertificate> collect_certificates(const Json& j);

}  // namespace cgr
