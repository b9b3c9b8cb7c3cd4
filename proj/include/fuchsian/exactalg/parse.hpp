#ifndef FUCHSIAN_EXACTALG_PARSE_HPP
#define FUCHSIAN_EXACTALG_PARSE_HPP

#include "fuchsian/exactalg/ratfunc.hpp"

#include <string_view>

namespace fuchsian {

/// Parses expressions such as "(36*y^2 - 41*y + 32)/(36*y^2*(y-1)^2)".
/// Integers only (no decimal points); juxtaposition multiplies ("3y", "2(y-1)");
/// '^' takes an integer exponent and binds tighter than unary minus.
RatFunc parse_ratfunc(std::string_view text, char var = 'y');

}  // namespace fuchsian

#endif
