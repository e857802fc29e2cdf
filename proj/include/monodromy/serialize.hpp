#pragma once

#include "monodromy/inertia.hpp"
#include "monodromy/verify.hpp"

#include <json.hpp>

#include <string>

namespace monodromy {

using OrderedJson = nlohmann::ordered_json;

// Matrices travel as arrays of arrays of decimal strings so consumers never
// lose precision.
OrderedJson matrix_to_json(const ExactMatrix& a);
ExactMatrix matrix_from_json(const OrderedJson& j);

// {"dim": int, "mode": {"integer": {"ell": "5"}} | {"residue": {"n": "7"}},
//  "tame": matrix, "wild": [matrix...], "form": matrix|null, "label": str}
OrderedJson rep_to_json(const InertiaRep& rep);
// Parses and validates; throws std::invalid_argument on malformed input.
InertiaRep rep_from_json(const OrderedJson& j);

OrderedJson classification_to_json(const Classification& c);

// Canonical form: stable key order, no wall-clock fields.
OrderedJson suite_report_to_json(const SuiteReport& r);

std::string canonical_dump(const OrderedJson& j);

}  // namespace monodromy
