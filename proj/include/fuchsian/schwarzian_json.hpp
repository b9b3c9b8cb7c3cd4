#ifndef FUCHSIAN_SCHWARZIAN_JSON_HPP
#define FUCHSIAN_SCHWARZIAN_JSON_HPP

#include "fuchsian/json_io.hpp"
#include "fuchsian/schwarzian.hpp"

namespace fuchsian::schwarzian {

/// {"points": [...], "angles": [...], "accessory": [...], "R": {"num": [...], "den": [...]}}
Json equation_json(const SchwarzianEquation& eq);
/// Rebuilds the equation from points, angles and accessory parameters and
/// rejects documents whose "R" disagrees.
SchwarzianEquation equation_from_json(const Json& j);

}  // namespace fuchsian::schwarzian

#endif
