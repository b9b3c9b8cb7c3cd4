#include "fuchsian/kovacic.hpp"

namespace fuchsian::kovacic {

bool triangle_reducibility(const schwarzian::TriangleParams& p)
{
    return is_integer(p.alpha) || is_integer(p.beta) || is_integer(p.gamma - p.alpha) ||
           is_integer(p.gamma - p.beta);
}

int half_integer_count(const schwarzian::TriangleParams& p)
{
    const Rational half(1, 2);
    return int(is_integer(p.lambda - half)) + int(is_integer(p.mu - half)) + int(is_integer(p.nu - half));
}

bool triangle_algebraic_riccati(const schwarzian::TriangleParams& p)
{
    if (triangle_reducibility(p))
        throw std::invalid_argument("triangle_algebraic_riccati: the equation is reducible");
    return half_integer_count(p) >= 2;
}

bool triangle_strong_minimality(const schwarzian::Signature& sig)
{
    if (!sig.is_triangle() || !sig.is_hyperbolic())
        throw schwarzian::InvalidSignature("strong minimality test needs a hyperbolic triangle signature");
    auto p = schwarzian::TriangleParams::from_signature(sig);
    return !triangle_reducibility(p) && !triangle_algebraic_riccati(p);
}

}  // namespace fuchsian::kovacic
