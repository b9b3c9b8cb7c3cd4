#ifndef FUCHSIAN_EXACTALG_FACTOR_HPP
#define FUCHSIAN_EXACTALG_FACTOR_HPP

#include "fuchsian/exactalg/poly.hpp"

#include <vector>

namespace fuchsian {

struct SquarefreeFactor {
    Poly factor;  // monic, squarefree
    int multiplicity;
};

struct RationalRoot {
    Rational value;
    int multiplicity;
};

/// Squarefree decomposition with every rational linear factor split off.
/// Product of factor^multiplicity equals p / leading(p).
struct Factorization {
    Rational leading;
    std::vector<SquarefreeFactor> factors;
    std::vector<RationalRoot> roots;  // ascending

    /// True when p splits into rational linear factors.
    bool splits() const;
};

Factorization squarefree_and_roots(const Poly& p);

/// Yun's squarefree decomposition (no splitting of the parts).
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

/// Distinct rational roots of p, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace fuchsian

#endif
