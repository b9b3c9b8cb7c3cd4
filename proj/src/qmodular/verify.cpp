#include "fuchsian/qmodular.hpp"

namespace fuchsian::qmodular {

std::string ResidualCheck::summary() const
{
    if (zero)
        return "residual zero through q^" + std::to_string(order);
    return "residual nonzero at q^" + std::to_string(*first_nonzero) + " (coefficient " + to_string(first_value) + ")";
}

namespace {

ResidualCheck inspect(QSeries residual, int order)
{
    if (residual.precision() <= order)
        throw TruncationError("series known below q^" + std::to_string(residual.precision()) +
                              ", cannot check through q^" + std::to_string(order));
    ResidualCheck out;
    out.order = order;
    out.zero = residual.valuation() > order;
    if (!out.zero) {
        out.first_nonzero = residual.valuation();
        out.first_value = residual.leading();
    }
    out.residual = std::move(residual);
    return out;
}

}  // namespace

ResidualCheck verify_schwarzian_q(const RatFunc& R, const QSeries& y, int order)
{
    const QSeries y1 = D(y), y2 = D(y1), y3 = D(y2);
    const QSeries lhs = Rational(2) * (y3 * y1) - Rational(3) * (y2 * y2);
    const QSeries y1sq = y1 * y1;
    QSeries residual = lhs;
    if (!R.is_zero())
        residual = lhs + y1sq * y1sq * eval_poly(R.num(), y) * eval_poly(R.den(), y).inverse();
    return inspect(std::move(residual), order);
}

ResidualCheck verify_special_poly(const SpecialPoly& phi, int N, int order)
{
    const int span = phi.degree_x() * (N + 1);
    const QSeries x = j_series(order + span + 4);
    return inspect(phi.evaluate(x, x.substitute_power(N)), order);
}

RelationRank relation_rank(const QSeries& x, const QSeries& y, int degree, int order)
{
    std::vector<QSeries> monos;
    QSeries xa = QSeries::constant(1, INT_MAX / 4);
    for (int a = 0; a <= degree; ++a) {
        QSeries term = xa;
        for (int b = 0; a + b <= degree; ++b) {
            monos.push_back(term);
            term = term * y;
        }
        xa = xa * x;
    }
    int low = 0;
    for (const auto& m : monos) {
        if (m.precision() <= order)
            throw TruncationError("relation_rank: monomial known below q^" + std::to_string(m.precision()));
        low = std::min(low, m.valuation());
    }
    RelationRank rr;
    rr.monomials = static_cast<int>(monos.size());
    rr.equations = order - low + 1;
    RationalMatrix m(static_cast<std::size_t>(rr.equations), std::vector<Rational>(monos.size()));
    for (int k = low; k <= order; ++k)
        for (std::size_t j = 0; j < monos.size(); ++j)
            m[static_cast<std::size_t>(k - low)][j] = monos[j].coeff(k);
    rr.rank = rank(std::move(m), rr.monomials);
    return rr;
}

}  // namespace fuchsian::qmodular
