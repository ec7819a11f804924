#pragma once

#include <json.hpp>
#include <string>

#include "cameron_walker.hpp"
#include "invariants.hpp"
#include "verify.hpp"

namespace misx {

// JSON shapes are part of the external interface: schema version 1,
// additive evolution only. Counts and bounds serialize as decimal strings.

nlohmann::json bundle_to_json(const InvariantBundle& bundle);
nlohmann::json certificate_to_json(const CWCertificate& cert);
nlohmann::json verdict_to_json(const BoundVerdict& verdict);
nlohmann::json recurrences_to_json(const RecurrenceReport& report);
nlohmann::json sweep_report_to_json(const SweepReport& report);

// Full AnalysisReport for one graph: input echo, invariant bundle,
// Cameron-Walker certificates, all five theorem verdicts, timing.
nlohmann::json analysis_report(const Graph& g, const MisOptions& opts = {});

}  // namespace misx
