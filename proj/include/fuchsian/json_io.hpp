#ifndef FUCHSIAN_JSON_IO_HPP
#define FUCHSIAN_JSON_IO_HPP

// JSON encodings shared by the modules. Rationals travel as "p/q" strings
// (integers without "/1"), polynomials as ascending coefficient lists.

#include "fuchsian/exactalg.hpp"

#include <json.hpp>

namespace fuchsian {

using Json = nlohmann::json;

inline Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j);
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json ratfunc_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);
Json series_json(const RationalSeries& s);

}  // namespace fuchsian

#endif
