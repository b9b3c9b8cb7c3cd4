#include "local.hpp"

#include <climits>
#include <sstream>

namespace fuchsian::kovacic {

namespace {

// rat + coef * sqrt(radicand); coef == 0 for rational values.
struct Surd {
    Rational rat, coef = 0, radicand = 1;
};

struct Choice {
    std::string where;
    RatFunc sqrt_part;  // +[sqrt r] for this point, 0 when absent
    std::array<Surd, 2> alpha;  // paired with +sqrt_part and -sqrt_part
    bool symmetric = false;     // both signs give the same candidate
};

Surd half_plus_half_root(const Rational& disc, int sign)
{
    if (auto root = exact_sqrt(disc))
        return {Rational(1, 2) + Rational(sign, 2) * *root};
    return {Rational(1, 2), Rational(sign, 2), disc};
}

// sum of the surd parts; zero iff the terms cancel over Q.
bool surd_parts_cancel(const std::vector<Surd>& terms)
{
    std::vector<std::pair<Rational, Rational>> classes;  // representative radicand, accumulated coefficient
    for (const auto& t : terms) {
        if (t.coef == 0)
            continue;
        bool placed = false;
        for (auto& [rep, acc] : classes) {
            if (auto s = exact_sqrt(rep * t.radicand)) {
                acc += t.coef * *s / abs(rep);
                placed = true;
                break;
            }
        }
        if (!placed)
            classes.emplace_back(t.radicand, t.coef);
    }
    for (const auto& c : classes)
        if (c.second != 0)
            return false;
    return true;
}

std::vector<Choice> choices(const detail::LocalData& ld)
{
    std::vector<Choice> out;
    const RatFunc y = RatFunc::identity();
    for (const auto& p : ld.poles) {
        Choice ch{detail::point_name(p.c), RatFunc(), {}, false};
        if (p.order == 1) {
            ch.alpha = {Surd{1}, Surd{1}};
            ch.symmetric = true;
        } else if (p.order == 2) {
            Rational b = detail::double_pole_coefficient(p);
            ch.alpha = {half_plus_half_root(1 + 4 * b, 1), half_plus_half_root(1 + 4 * b, -1)};
            ch.symmetric = exact_sqrt(1 + 4 * b) == Rational(0);
        } else {
            int nu = p.order / 2;
            auto s = detail::sqrt_head(p.laurent, -p.order, nu - 1);
            RatFunc part;
            const RatFunc t = y - RatFunc::constant(p.c);
            for (int k = 0; k < nu - 1; ++k)
                part += s[static_cast<std::size_t>(k)] * RatFunc(Poly::constant(1), pow(t.num(), nu - k));
            Rational b = p.laurent.coeff(-nu - 1);
            for (int i = 0; i < nu - 1; ++i) {
                int j = nu - 1 - i;
                if (j < nu - 1)
                    b -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
            }
            Rational a = s[0];
            ch.sqrt_part = part;
            ch.alpha = {Surd{(b / a + nu) / 2}, Surd{(-b / a + nu) / 2}};
        }
        out.push_back(std::move(ch));
    }

    Choice inf{"y=inf", RatFunc(), {}, false};
    if (ld.inf_order > 2) {
        inf.alpha = {Surd{0}, Surd{1}};
    } else if (ld.inf_order == 2) {
        Rational b = detail::infinity_coefficient2(ld);
        inf.alpha = {half_plus_half_root(1 + 4 * b, 1), half_plus_half_root(1 + 4 * b, -1)};
        inf.symmetric = exact_sqrt(1 + 4 * b) == Rational(0);
    } else {
        int nu = -ld.inf_order / 2;
        auto s = detail::sqrt_head(ld.inf_laurent, -2 * nu, nu + 1);
        std::vector<Rational> coeffs(static_cast<std::size_t>(nu + 1));
        for (int k = 0; k <= nu; ++k)
            coeffs[static_cast<std::size_t>(nu - k)] = s[static_cast<std::size_t>(k)];
        Rational b = ld.inf_laurent.coeff(1 - nu);
        for (int i = 0; i <= nu; ++i) {
            int j = nu + 1 - i;
            if (j >= 0 && j <= nu)
                b -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        Rational a = s[0];
        inf.sqrt_part = RatFunc(Poly(coeffs));
        inf.alpha = {Surd{(b / a - nu) / 2}, Surd{(-b / a - nu) / 2}};
    }
    out.push_back(std::move(inf));
    return out;
}

std::string describe(const Surd& s)
{
    if (s.coef == 0)
        return to_string(s.rat);
    return to_string(s.rat) + (s.coef > 0 ? "+" : "") + to_string(s.coef) + "*sqrt(" + to_string(s.radicand) + ")";
}

}  // namespace

std::optional<Case1Certificate> case1(const RatFunc& r, Log* log)
{
    detail::LocalData ld = detail::local_data(r);
    for (const auto& p : ld.poles) {
        if (p.order != 1 && p.order % 2 != 0) {
            if (log)
                log->push_back("case1: inapplicable, pole " + detail::point_name(p.c) + " has odd order " +
                               std::to_string(p.order));
            return std::nullopt;
        }
    }
    if (ld.inf_order != INT_MAX && ld.inf_order <= 2 && ld.inf_order % 2 != 0) {
        if (log)
            log->push_back("case1: inapplicable, odd order " + std::to_string(ld.inf_order) + " at infinity");
        return std::nullopt;
    }

    const std::vector<Choice> pts = choices(ld);
    const std::size_t n = pts.size();
    const RatFunc y = RatFunc::identity();
    std::vector<std::size_t> free_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (!pts[i].symmetric)
            free_idx.push_back(i);

    const std::size_t families = std::size_t{1} << free_idx.size();
    for (std::size_t mask = 0; mask < families; ++mask) {
        std::vector<int> sign(n, 1);
        for (std::size_t b = 0; b < free_idx.size(); ++b)
            if (mask >> b & 1)
                sign[free_idx[b]] = -1;

        std::ostringstream label;
        label << "case1 family [";
        std::vector<Surd> terms;
        Rational d_rat = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Surd& a = pts[i].alpha[sign[i] > 0 ? 0 : 1];
            label << (i ? ", " : "") << pts[i].where << ":" << (sign[i] > 0 ? "+" : "-") << " alpha=" << describe(a);
            Surd t = a;
            if (i + 1 < n) {  // finite points enter with a minus sign
                t.rat = -t.rat;
                t.coef = -t.coef;
            }
            d_rat += t.rat;
            terms.push_back(t);
        }
        label << "]";

        if (!surd_parts_cancel(terms)) {
            if (log)
                log->push_back(label.str() + " d irrational: rejected");
            continue;
        }
        if (!is_integer(d_rat) || d_rat < 0) {
            if (log)
                log->push_back(label.str() + " d=" + to_string(d_rat) + ": rejected (not a non-negative integer)");
            continue;
        }
        for (const auto& t : terms)
            if (t.coef != 0)
                throw UnsupportedInput(label.str() + " passes the degree test with irrational exponents");

        RatFunc omega;
        for (std::size_t i = 0; i < n; ++i) {
            const Surd& a = pts[i].alpha[sign[i] > 0 ? 0 : 1];
            omega += Rational(sign[i]) * pts[i].sqrt_part;
            if (i + 1 < n)
                omega += a.rat * (y - RatFunc::constant(ld.poles[i].c)).inverse();
        }
        const int d = static_cast<int>(d_rat.get_num().get_si());
        const RatFunc two_omega = Rational(2) * omega;
        const RatFunc zeroth = omega.derivative() + omega * omega - r;
        auto op = [&](const Poly& P) {
            return RatFunc(P.derivative().derivative()) + two_omega * RatFunc(P.derivative()) + zeroth * RatFunc(P);
        };
        auto P = detail::solve_monic(op, d);
        if (!P) {
            if (log)
                log->push_back(label.str() + " d=" + std::to_string(d) + ": no polynomial of that degree");
            continue;
        }
        Case1Certificate cert{omega, *P, omega + RatFunc(P->derivative(), *P)};
        if (log)
            log->push_back(label.str() + " d=" + std::to_string(d) + ": solution P=" + P->to_string() +
                           ", omega=" + cert.omega.to_string());
        return cert;
    }
    return std::nullopt;
}

bool verify_case1(const Case1Certificate& c, const RatFunc& r)
{
    if (c.P.is_zero() || c.P.leading() != 1)
        return false;
    const RatFunc& w = c.family_omega;
    RatFunc aux = RatFunc(c.P.derivative().derivative()) + Rational(2) * w * RatFunc(c.P.derivative()) +
                  (w.derivative() + w * w - r) * RatFunc(c.P);
    if (!aux.is_zero())
        return false;
    if (!(c.omega == w + RatFunc(c.P.derivative(), c.P)))
        return false;
    return c.omega.derivative() + c.omega * c.omega == r;
}

}  // namespace fuchsian::kovacic
