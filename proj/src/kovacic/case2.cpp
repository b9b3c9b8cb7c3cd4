#include "local.hpp"

#include <climits>
#include <sstream>

namespace fuchsian::kovacic {

namespace {

struct ESet {
    std::string where;
    std::vector<Rational> values;
};

const std::vector<int> kCase2Ks{0, 2, -2};

std::vector<ESet> case2_sets(const detail::LocalData& ld)
{
    std::vector<ESet> out;
    for (const auto& p : ld.poles) {
        ESet e{detail::point_name(p.c), {}};
        if (p.order == 1)
            e.values = {4};
        else if (p.order == 2)
            e.values = detail::integer_exponent_set(2, 1, 1 + 4 * detail::double_pole_coefficient(p), kCase2Ks);
        else
            e.values = {p.order};
        out.push_back(std::move(e));
    }
    ESet inf{"y=inf", {}};
    if (ld.inf_order > 2)
        inf.values = {0, 2, 4};
    else if (ld.inf_order == 2)
        inf.values = detail::integer_exponent_set(2, 1, 1 + 4 * detail::infinity_coefficient2(ld), kCase2Ks);
    else
        inf.values = {ld.inf_order};
    out.push_back(std::move(inf));
    return out;
}

}  // namespace

std::optional<Case2Certificate> case2(const RatFunc& r, Log* log)
{
    detail::LocalData ld = detail::local_data(r);
    bool applicable = false;
    for (const auto& p : ld.poles)
        if (p.order == 2 || (p.order > 2 && p.order % 2 == 1))
            applicable = true;
    if (!applicable) {
        if (log)
            log->push_back("case2: inapplicable, no pole of order 2 or of odd order > 2");
        return std::nullopt;
    }

    const std::vector<ESet> sets = case2_sets(ld);
    const std::size_t n = sets.size();
    for (const auto& s : sets) {
        if (s.values.empty()) {
            if (log)
                log->push_back("case2: empty exponent set at " + s.where);
            return std::nullopt;
        }
    }

    const RatFunc y = RatFunc::identity();
    const RatFunc r1 = r.derivative();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::ostringstream label;
        label << "case2 family [";
        Rational sum_finite = 0;
        RatFunc theta;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& e = sets[i].values[idx[i]];
            label << (i ? ", " : "") << sets[i].where << ":" << to_string(e);
            if (i + 1 < n) {
                sum_finite += e;
                theta += (e / 2) * (y - RatFunc::constant(ld.poles[i].c)).inverse();
            }
        }
        label << "]";
        Rational d_rat = (sets[n - 1].values[idx[n - 1]] - sum_finite) / 2;

        if (!is_integer(d_rat) || d_rat < 0) {
            if (log)
                log->push_back(label.str() + " d=" + to_string(d_rat) + ": rejected (not a non-negative integer)");
        } else {
            const int d = static_cast<int>(d_rat.get_num().get_si());
            const RatFunc t1 = theta.derivative(), t2 = t1.derivative();
            const RatFunc c2 = Rational(3) * theta;
            const RatFunc c1 = Rational(3) * theta * theta + Rational(3) * t1 - Rational(4) * r;
            const RatFunc c0 = t2 + Rational(3) * theta * t1 + theta * theta * theta - Rational(4) * r * theta -
                               Rational(2) * r1;
            auto op = [&](const Poly& P) {
                Poly p1 = P.derivative(), p2 = p1.derivative(), p3 = p2.derivative();
                return RatFunc(p3) + c2 * RatFunc(p2) + c1 * RatFunc(p1) + c0 * RatFunc(P);
            };
            if (auto P = detail::solve_monic(op, d)) {
                RatFunc phi = theta + RatFunc(P->derivative(), *P);
                RatFunc psi = Rational(1, 2) * phi.derivative() + Rational(1, 2) * phi * phi - r;
                Case2Certificate cert{theta, *P, phi, {psi, -phi, RatFunc::constant(1)}};
                if (log)
                    log->push_back(label.str() + " d=" + std::to_string(d) + ": solution P=" + P->to_string() +
                                   ", phi=" + phi.to_string());
                return cert;
            }
            if (log)
                log->push_back(label.str() + " d=" + std::to_string(d) + ": no polynomial of that degree");
        }

        std::size_t k = 0;
        while (k < n && ++idx[k] == sets[k].values.size())
            idx[k++] = 0;
        if (k == n)
            break;
    }
    return std::nullopt;
}

}  // namespace fuchsian::kovacic
