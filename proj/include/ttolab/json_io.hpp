#pragma once

#include <string>

#include <json.hpp>

#include "ttolab/inner.hpp"

namespace ttolab {

// Insertion-ordered documents keep report output byte-stable.
using ordered_json = nlohmann::ordered_json;

/// {"type": "blaschke", "zeros": [{"re": .., "im": ..}, ...]}
BlaschkeProduct parse_blaschke(const ordered_json& j);
ordered_json to_json(const BlaschkeProduct& u);

/// {"type": "singular", "atoms": [{"angle": .., "weight": ..}, ...]}
AtomicMeasure parse_atomic_measure(const ordered_json& j);
ordered_json to_json(const AtomicMeasure& nu);

BlaschkeProduct parse_blaschke_string(const std::string& text);
AtomicMeasure parse_atomic_measure_string(const std::string& text);

ordered_json to_json(cplx z);

}  // namespace ttolab
