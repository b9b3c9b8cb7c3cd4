#include "local.hpp"

#include <climits>
#include <sstream>

namespace fuchsian::kovacic {

namespace {

struct Row {
    int row;
    Rational a, b, c;
    const char* group;
};

const std::vector<Row>& schwarz_table()
{
    static const std::vector<Row> rows = {
        {2, Rational(1, 2), Rational(1, 3), Rational(1, 3), "tetrahedral"},
        {3, Rational(2, 3), Rational(1, 3), Rational(1, 3), "tetrahedral"},
        {4, Rational(1, 2), Rational(1, 3), Rational(1, 4), "octahedral"},
        {5, Rational(2, 3), Rational(1, 4), Rational(1, 4), "octahedral"},
        {6, Rational(1, 2), Rational(1, 3), Rational(1, 5), "icosahedral"},
        {7, Rational(2, 5), Rational(1, 3), Rational(1, 3), "icosahedral"},
        {8, Rational(2, 3), Rational(1, 5), Rational(1, 5), "icosahedral"},
        {9, Rational(1, 2), Rational(2, 5), Rational(1, 5), "icosahedral"},
        {10, Rational(3, 5), Rational(1, 3), Rational(1, 5), "icosahedral"},
        {11, Rational(2, 5), Rational(2, 5), Rational(2, 5), "icosahedral"},
        {12, Rational(2, 3), Rational(1, 3), Rational(1, 5), "icosahedral"},
        {13, Rational(4, 5), Rational(1, 5), Rational(1, 5), "icosahedral"},
        {14, Rational(1, 2), Rational(2, 5), Rational(1, 3), "icosahedral"},
        {15, Rational(3, 5), Rational(2, 5), Rational(1, 3), "icosahedral"},
    };
    return rows;
}

// Integer shifts l with x = +-(t + l), i.e. l = x - t or l = -x - t.
std::vector<BigInt> shifts(const Rational& x, const Rational& t)
{
    std::vector<BigInt> out;
    for (const Rational& v : {Rational(x - t), Rational(-x - t)})
        if (is_integer(v))
            out.push_back(v.get_num());
    return out;
}

bool odd_integer(const Rational& q)
{
    return is_integer(q) && mpz_odd_p(q.get_num_mpz_t());
}

std::string triple(const Rational& a, const Rational& b, const Rational& c)
{
    return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";
}

}  // namespace

bool hypergeometric_reducible(const Rational& l, const Rational& m, const Rational& n)
{
    return odd_integer(l + m + n) || odd_integer(-l + m + n) || odd_integer(l - m + n) || odd_integer(l + m - n);
}

std::optional<SchwarzMatch> schwarz_list_match(const Rational& lambda, const Rational& mu, const Rational& nu)
{
    const std::array<Rational, 3> x{lambda, mu, nu};
    const Rational half(1, 2);
    for (int i = 0; i < 3; ++i) {
        const Rational& p = x[static_cast<std::size_t>(i)];
        const Rational& q = x[static_cast<std::size_t>((i + 1) % 3)];
        if (is_integer(p - half) && is_integer(q - half))
            return SchwarzMatch{1, "dihedral " + triple(lambda, mu, nu)};
    }
    static const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& row : schwarz_table()) {
        const std::array<Rational, 3> t{row.a, row.b, row.c};
        for (const auto& p : perms) {
            for (const auto& l : shifts(x[0], t[static_cast<std::size_t>(p[0])]))
                for (const auto& m : shifts(x[1], t[static_cast<std::size_t>(p[1])]))
                    for (const auto& n : shifts(x[2], t[static_cast<std::size_t>(p[2])]))
                        if (mpz_even_p(BigInt(l + m + n).get_mpz_t()))
                            return SchwarzMatch{row.row, std::string(row.group) + " " + triple(lambda, mu, nu) +
                                                             " ~ row " + std::to_string(row.row) + " " +
                                                             triple(row.a, row.b, row.c)};
        }
    }
    return std::nullopt;
}

namespace {

struct ESet {
    std::string where;
    std::vector<Rational> values;
};

std::optional<Case3Certificate> search(const RatFunc& r, const detail::LocalData& ld, Log* log)
{
    const RatFunc y = RatFunc::identity();
    const Poly S = detail::pole_product(ld);
    const Poly S1 = S.derivative();
    const RatFunc S2r_f = RatFunc(S * S) * r;
    if (!S2r_f.is_polynomial())
        throw std::logic_error("case3 search needs poles of order at most 2");
    const Poly S2r = S2r_f.num() * (1 / S2r_f.den().leading());

    for (int n : {4, 6, 12}) {
        std::vector<int> ks;
        for (int k = -n / 2; k <= n / 2; ++k)
            ks.push_back(k);
        const Rational step = make_rational(12, n);
        std::vector<ESet> sets;
        for (const auto& p : ld.poles) {
            if (p.order == 1)
                sets.push_back({detail::point_name(p.c), {12}});
            else
                sets.push_back({detail::point_name(p.c),
                                detail::integer_exponent_set(6, step, 1 + 4 * detail::double_pole_coefficient(p), ks)});
        }
        Rational gamma = ld.inf_order == 2 ? detail::infinity_coefficient2(ld) : Rational(0);
        sets.push_back({"y=inf", detail::integer_exponent_set(6, step, 1 + 4 * gamma, ks)});

        std::size_t families = 1;
        for (const auto& s : sets)
            families *= s.values.size();
        std::size_t rejected = 0;
        if (families == 0) {
            if (log)
                log->push_back("case3 n=" + std::to_string(n) + ": empty exponent set");
            continue;
        }

        std::vector<std::size_t> idx(sets.size(), 0);
        const std::size_t m = sets.size();
        while (true) {
            Rational sum_finite = 0;
            for (std::size_t i = 0; i + 1 < m; ++i)
                sum_finite += sets[i].values[idx[i]];
            Rational d_rat = make_rational(n, 12) * (sets[m - 1].values[idx[m - 1]] - sum_finite);
            if (!is_integer(d_rat) || d_rat < 0) {
                ++rejected;
            } else {
                std::ostringstream label;
                label << "case3 n=" << n << " family [";
                RatFunc theta;
                for (std::size_t i = 0; i < m; ++i) {
                    label << (i ? ", " : "") << sets[i].where << ":" << to_string(sets[i].values[idx[i]]);
                    if (i + 1 < m)
                        theta += (make_rational(n, 12) * sets[i].values[idx[i]]) *
                                 (y - RatFunc::constant(ld.poles[i].c)).inverse();
                }
                label << "]";
                const Poly Stheta = (RatFunc(S) * theta).num();
                const int d = static_cast<int>(d_rat.get_num().get_si());

                auto chain = [&](const Poly& P) {
                    // chain[i + 1] = P_i for i = -1..n
                    std::vector<Poly> Pi(static_cast<std::size_t>(n + 2));
                    Pi[static_cast<std::size_t>(n + 1)] = -P;
                    Poly next;  // P_{i+1}
                    for (int i = n; i >= 0; --i) {
                        const Poly& cur = Pi[static_cast<std::size_t>(i + 1)];
                        Poly prev = -(S * cur.derivative()) + (Rational(n - i) * S1 - Stheta) * cur -
                                    Rational((n - i) * (i + 1)) * S2r * next;
                        next = cur;
                        Pi[static_cast<std::size_t>(i)] = std::move(prev);
                    }
                    return Pi;
                };
                auto P = detail::solve_monic_poly([&](const Poly& p) { return chain(p)[0]; }, d);
                if (!P) {
                    if (log)
                        log->push_back(label.str() + " d=" + std::to_string(d) + ": no polynomial of that degree");
                } else {
                    auto Pi = chain(*P);
                    std::vector<RatFunc> coeffs;
                    // a_i = S^i P_i / (n - i)!
                    for (int i = 0; i <= n; ++i) {
                        BigInt f = 1;
                        for (int k = 2; k <= n - i; ++k)
                            f *= k;
                        coeffs.push_back(RatFunc(pow(S, i) * Pi[static_cast<std::size_t>(i + 1)] * Rational(1, f)));
                    }
                    const RatFunc lead = coeffs.back();
                    for (auto& c : coeffs)
                        c = c / lead;
                    if (verify_algebraic_riccati(coeffs, r)) {
                        if (log)
                            log->push_back(label.str() + " d=" + std::to_string(d) + ": solution P=" +
                                           P->to_string());
                        return Case3Certificate{n, std::move(coeffs)};
                    }
                    if (log)
                        log->push_back(label.str() + " d=" + std::to_string(d) +
                                       ": polynomial found but the minimal polynomial fails verification");
                }
            }
            std::size_t k = 0;
            while (k < m && ++idx[k] == sets[k].values.size())
                idx[k++] = 0;
            if (k == m)
                break;
        }
        if (log)
            log->push_back("case3 n=" + std::to_string(n) + ": " + std::to_string(families) + " families, " +
                           std::to_string(rejected) + " rejected by the degree test");
    }
    return std::nullopt;
}

}  // namespace

Case3Outcome case3(const RatFunc& r, const Options& opts, Log* log)
{
    Case3Outcome out;
    detail::LocalData ld = detail::local_data(r);
    for (const auto& p : ld.poles) {
        if (p.order > 2) {
            if (log)
                log->push_back("case3: inapplicable, pole " + detail::point_name(p.c) + " of order " +
                               std::to_string(p.order));
            return out;
        }
    }
    if (ld.inf_order < 2) {
        if (log)
            log->push_back("case3: inapplicable, order " + std::to_string(ld.inf_order) + " at infinity");
        return out;
    }

    std::vector<Rational> diffs;
    std::vector<std::string> where;
    for (const auto& p : classify_singularities(r)) {
        if (p.tag == PointTag::Regular)
            continue;
        where.push_back(p.location.to_string());
        if (!p.exponent_difference) {
            if (log)
                log->push_back("case3: absent, exponent difference sqrt(" + to_string(p.difference_squared) +
                               ") at y=" + p.location.to_string() + " is irrational (local monodromy of infinite order)");
            return out;
        }
        diffs.push_back(*p.exponent_difference);
    }

    if (diffs.size() == 3 && opts.schwarz_shortcut) {
        const std::string t = triple(diffs[0], diffs[1], diffs[2]);
        if (hypergeometric_reducible(diffs[0], diffs[1], diffs[2])) {
            if (log)
                log->push_back("case3: absent, exponent differences " + t + " give a reducible equation");
            return out;
        }
        out.schwarz = schwarz_list_match(diffs[0], diffs[1], diffs[2]);
        if (!out.schwarz) {
            if (log)
                log->push_back("case3: absent, exponent differences " + t + " at (" + where[0] + ", " + where[1] +
                               ", " + where[2] + ") are not on the Schwarz list");
            return out;
        }
        if (log)
            log->push_back("case3: present, " + out.schwarz->description);
        if (opts.case3_search) {
            out.certificate = search(r, ld, log);
            if (!out.certificate && log)
                log->push_back("case3: no certificate from the auxiliary-polynomial search");
        }
        return out;
    }

    if (!opts.case3_search) {
        out.undetermined = true;
        if (log)
            log->push_back("case3: undetermined, " + std::to_string(diffs.size()) +
                           " singular points and the auxiliary-polynomial search is off");
        return out;
    }
    out.certificate = search(r, ld, log);
    return out;
}

}  // namespace fuchsian::kovacic
