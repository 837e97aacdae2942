#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/arboreal.hpp"
#include "arbor/closure.hpp"
#include "arbor/frontgen.hpp"
#include "arbor/localization.hpp"
#include "arbor/modcat.hpp"

namespace arbor {

using Json = nlohmann::ordered_json;

Json to_json(const SaturationStep& step);
SaturationStep saturation_step_from_json(const Json& j);

Json to_json(const ClosedMorphismSet& closure);
/// Rebuilds a closure result; `q` fixes the quiver the payload refers to.
ClosedMorphismSet closure_from_json(const LinearQuiver& q, const Json& j);

Json to_json(const LooseReport& report);
/// Inverse of to_json: re-validates closedness and the cell table against
/// a fresh computation and throws DomainError on a mismatch.
LooseReport loose_report_from_json(const Json& j);

/// Serialized form used by the CLI: two-space indent, trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

Json to_json(const SkeletonReport& sk);
Json localization_json(const LocalizedCategory& lc, const SkeletonReport& sk,
                       const MorphismSet& iso_image, bool with_composition);

Json to_json(const ForcedIsoSet& forced, const ClosedMorphismSet& closure);

Json to_json(const RegionCensus& census);

}  // namespace arbor
