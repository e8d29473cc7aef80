#pragma once

#include <json.hpp>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Full invariant report for one labeled poset; the layout is described by
/// docs/analyze.schema.json. Fields that need a graded or consistent labeling
/// are null otherwise.
nlohmann::json analyze(const LabeledPoset& lp);

}  // namespace posetlab
