#ifndef FUCHSIAN_EXACTALG_PARTIAL_FRACTIONS_HPP
#define FUCHSIAN_EXACTALG_PARTIAL_FRACTIONS_HPP

#include "fuchsian/exactalg/ratfunc.hpp"
#include "fuchsian/exactalg/series.hpp"

#include <span>
#include <vector>

namespace fuchsian {

/// coefficient / (y - pole)^order
struct PartialFractionTerm {
    Rational pole;
    int order;
    Rational coefficient;
};

struct PartialFractionForm {
    Poly polynomial_part;
    std::vector<PartialFractionTerm> terms;  // by pole, then descending order

    RatFunc reconstruct() const;
    /// Zero when the term is absent.
    Rational coefficient(const Rational& pole, int order) const;
};

/// Decomposes f over the supplied rational poles. Throws AlgebraError when
/// the denominator of f does not split over the list.
PartialFractionForm partial_fractions(const RatFunc& f, std::span<const Rational> poles);

/// Laurent expansion of f at y = a in t = y - a, with coefficients known
/// below t^precision.
RationalSeries laurent_at(const RatFunc& f, const Rational& a, int precision);

/// Expansion of f at infinity in t = 1/y, known below t^precision.
RationalSeries laurent_at_infinity(const RatFunc& f, int precision);

/// Multiplicity of a as a root of p.
int root_multiplicity(const Poly& p, const Rational& a);

}  // namespace fuchsian

#endif
