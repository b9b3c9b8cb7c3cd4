#include "fuchsian/kovacic.hpp"

namespace fuchsian::kovacic {

bool verify_algebraic_riccati(const std::vector<RatFunc>& poly, const RatFunc& r)
{
    const int n = static_cast<int>(poly.size()) - 1;
    if (n < 1 || !(poly.back() == RatFunc::constant(1)))
        return false;
    // G(w) = sum a_i' w^i + sum i a_i w^(i-1) (r - w^2), degree n + 1
    std::vector<RatFunc> g(static_cast<std::size_t>(n + 2));
    for (int i = 0; i <= n; ++i) {
        const RatFunc& a = poly[static_cast<std::size_t>(i)];
        g[static_cast<std::size_t>(i)] += a.derivative();
        if (i >= 1) {
            RatFunc ia = Rational(i) * a;
            g[static_cast<std::size_t>(i - 1)] += ia * r;
            g[static_cast<std::size_t>(i + 1)] -= ia;
        }
    }
    for (int top = n + 1; top >= n; --top) {
        RatFunc c = g[static_cast<std::size_t>(top)];
        if (c.is_zero())
            continue;
        for (int i = 0; i <= n; ++i)
            g[static_cast<std::size_t>(top - n + i)] -= c * poly[static_cast<std::size_t>(i)];
    }
    for (const auto& c : g)
        if (!c.is_zero())
            return false;
    return true;
}

bool verify(const KovacicVerdict& v, const RatFunc& r)
{
    switch (v.kind) {
    case Case::One:
        return v.case1 && verify_case1(*v.case1, r);
    case Case::Two: {
        if (!v.case2)
            return false;
        const auto& q = v.case2->quadratic;
        return verify_algebraic_riccati({q[0], q[1], q[2]}, r);
    }
    case Case::Three:
        if (v.case3)
            return verify_algebraic_riccati(v.case3->polynomial, r);
        return v.schwarz.has_value();
    case Case::Four:
    case Case::Undetermined3:
        return !v.case1 && !v.case2 && !v.case3;
    }
    return false;
}

}  // namespace fuchsian::kovacic
