#pragma once

#include <nlohmann/json.hpp>

#include "conglab/classify.hpp"
#include "conglab/partition_system.hpp"
#include "conglab/graph.hpp"
#include "conglab/partition.hpp"
#include "conglab/reduce.hpp"
#include "conglab/sim.hpp"
#include "conglab/sphere.hpp"
#include "conglab/transform.hpp"

namespace conglab::report {

using nlohmann::json;

// Masks are sorted piece arrays, congruence numbers are one-based.
json to_json(const PieceMask& m);
json to_json(const CongruenceSystem& sys);
json to_json(const Deduction& d);
json to_json(const ClassificationReport& rep);
json to_json(const ReduceResult& res);
json to_json(const TransformResult& res);
json to_json(const PartitionSystem& ps);
json to_json(const CongruenceDigraph& g, const DigraphEdge& e);
json to_json(const PartitionViolation& v, const Presentation& p);
json to_json(const GroupPartition& part);
json to_json(const PartitionReport& rep, const Presentation& p);
json to_json(const OrbitPartitionReport& rep, const Presentation& p);
json to_json(const FreenessCertificate& cert, const GroupRealization& real);
json to_json(const InvariantReport& rep);
json to_json(const StageRecord& rec);
json to_json(const RunSummary& sum);

}  // namespace conglab::report
