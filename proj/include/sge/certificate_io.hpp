#pragma once

#include <stdexcept>
#include <string>

#include "sge/certificate.hpp"

namespace sge {

// Parse failure; `where` is the JSON path of the offending field, e.g.
// "paths[2].waypoints[0]".
class certificate_parse_error : public std::runtime_error {
public:
    certificate_parse_error(std::string where, const std::string& what);
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Serializes to the canonical JSON text:
//   {"grid": {"n": .., "m": ..},
//    "S": [[x,y], ...],
//    "paths": [{"pair": [[x1,y1],[x2,y2]], "waypoints": [[x,y], ...]}, ...]}
// Field order and formatting are deterministic.
std::string to_json(const Certificate& c);

// Strict parser for the schema above.  Rejects unknown fields, out-of-bounds
// or 0-based coordinates, duplicate S entries, pair endpoints outside S,
// waypoint sequences that do not run between their pair's endpoints, and
// non-adjacent consecutive waypoints.  Defects beyond the schema (duplicate
// pairs, non-geodesic but adjacent walks, missing coverage) are left to
// verify().
Certificate certificate_from_json(const std::string& text);

}  // namespace sge
