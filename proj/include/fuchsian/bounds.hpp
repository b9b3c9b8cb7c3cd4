#ifndef FUCHSIAN_BOUNDS_HPP
#define FUCHSIAN_BOUNDS_HPP

#include "fuchsian/exactalg/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace fuchsian::bounds {

class BoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ZariskiInput {
    long deg_x = 1;
    long deg_s = 1;
    long m = 1;    // ambient dimension
    long ell = 1;  // prolongation order
};

/// Refuse results with more decimal digits than this.
inline constexpr double kMaxDigits = 5e7;

/// deg(X)^(ell 2^(m ell)) * deg(S)^(2^(m ell) - 1)
BigInt zariski_closure_bound(const ZariskiInput& in);

/// ((2r + 2)^n deg V)^(2^(3n) - 1)
BigInt andre_pink_bound(long r, long n, long deg_v);

/// log10 of the bounds, computed without forming them.
double zariski_closure_log10(const ZariskiInput& in);
double andre_pink_log10(long r, long n, long deg_v);

std::size_t decimal_digits(const BigInt& v);

}  // namespace fuchsian::bounds

#endif
