#pragma once

/**
 * @file presentation_io.hpp
 * @brief Export of PresentedRing as line-oriented CAS text or lossless JSON,
 *        and construction of rings from JSON builder specs.
 */

#include <string>

#include <json.hpp>

#include "ufdlab/constructions.hpp"

namespace ufdlab {

/**
 * Line format:
 *   field: F5
 *   variables: X1, X2, X3
 *   weights: X1=15, X2=10, X3=6      (graded rings only)
 *   relation: X1^2 + X2^3 + X3^5     (one line per relation)
 *   note: key = value
 */
std::string to_cas_text(const PresentedRing& ring);

nlohmann::json to_json(const PresentedRing& ring);
/// Inverse of to_json.
PresentedRing presentation_from_json(const nlohmann::json& j);

/**
 * Builds a ring from {"builder": name, ...}. Builders: "presentation"
 * (the to_json layout), "free", "samuel-extension", "radical-extension",
 * "fourth-criterion", "pham-brieskorn", "threefold", "trinomial".
 */
PresentedRing ring_from_spec(const nlohmann::json& spec);

/// Parses a field element ("3", "-1/2") in `field`.
FieldElem parse_field_elem(const nlohmann::json& v, Field field);

}  // namespace ufdlab
