#ifndef FUCHSIAN_KOVACIC_LOCAL_HPP
#define FUCHSIAN_KOVACIC_LOCAL_HPP

#include "fuchsian/kovacic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fuchsian::kovacic::detail {

struct Pole {
    Rational c;
    int order = 0;
    RationalSeries laurent;  // in t = y - c, known below t^1
};

struct LocalData {
    std::vector<Pole> poles;  // ascending
    int inf_order = 0;        // deg den - deg num (INT_MAX for r = 0)
    RationalSeries inf_laurent;  // in t = 1/y, known below t^3
};

LocalData local_data(const RatFunc& r);

/// Coefficient of t^-2 at a pole (0 for simple poles).
Rational double_pole_coefficient(const Pole& p);
/// Coefficient of y^-2 in the expansion at infinity.
Rational infinity_coefficient2(const LocalData& ld);

/// Leading coefficients s_0..s_{count-1} of the square root of a series
/// whose expansion starts at t^{2 nu}: sqrt = t^nu (s_0 + s_1 t + ...).
/// Throws UnsupportedInput unless the leading coefficient is a square.
std::vector<Rational> sqrt_head(const RationalSeries& s, int start, int count);

/// Monic P of degree d with op(P) = 0, where op is linear.
std::optional<Poly> solve_monic(const std::function<RatFunc(const Poly&)>& op, int d);

/// Same, for an operator whose values are polynomials.
std::optional<Poly> solve_monic_poly(const std::function<Poly(const Poly&)>& op, int d);

/// Product of (y - c) over the poles.
Poly pole_product(const LocalData& ld);

std::string point_name(const Rational& c);

/// Integers in {base + k*step*sqrt(disc) : k in ks}; when disc is not a
/// square only k = 0 survives.
std::vector<Rational> integer_exponent_set(const Rational& base, const Rational& step, const Rational& disc,
                                           const std::vector<int>& ks);

}  // namespace fuchsian::kovacic::detail

#endif
