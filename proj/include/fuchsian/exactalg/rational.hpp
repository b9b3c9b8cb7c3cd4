#ifndef FUCHSIAN_EXACTALG_RATIONAL_HPP
#define FUCHSIAN_EXACTALG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuchsian {

// GMP rationals are kept canonical (gcd 1, positive denominator) by every
// operation in this library; values built from raw num/den pairs go through
// make_rational().
using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised for malformed input in the exact layer (bad "p/q" strings, zero
/// denominators, division by the zero polynomial or rational function).
class AlgebraError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q", "p" or "-p/q". Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without the "/1".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
BigInt floor(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace fuchsian

#endif
