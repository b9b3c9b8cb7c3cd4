// Acceptance run: one PASS/FAIL line per criterion with wall time. A criterion
// also fails when it exceeds its time limit.

#include "fuchsian/bounds.hpp"
#include "fuchsian/kovacic.hpp"
#include "fuchsian/monodromy.hpp"
#include "fuchsian/qmodular.hpp"
#include "fuchsian/schwarzian.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fuchsian;
namespace sw = fuchsian::schwarzian;
namespace kv = fuchsian::kovacic;
namespace md = fuchsian::monodromy;
namespace qm = fuchsian::qmodular;
namespace bd = fuchsian::bounds;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

BigInt pow_chain(BigInt base, unsigned long e)
{
    BigInt acc = 1;
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------- criteria

Outcome normalization()
{
    Outcome o;
    RatFunc expected(Poly{2654208, -1968, 1}, Poly::monomial(1, 2) * pow(Poly::linear(1728), 2));
    RatFunc got = sw::rescale_hauptmodul(sw::triangle_R(sw::Signature::parse("2,3,inf")), 1728);
    o.require(got.num() == expected.num() && got.den() == expected.den(), "rescaled R differs");
    o.require(got == sw::classical_j_R(), "classical R_j differs");
    o.detail = o.ok ? "R = " + got.to_string() : o.detail;
    return o;
}

Outcome ode_verification()
{
    Outcome o;
    const RatFunc Rj = sw::classical_j_R();
    const auto j = qm::j_series(60);
    auto check = qm::verify_schwarzian_q(Rj, j, 40);
    o.require(check.zero, check.summary());
    int worst = 0, perturbed = 0;
    auto num = Rj.num().coeffs(), den = Rj.den().coeffs();
    for (int side = 0; side < 2; ++side) {
        const std::size_t len = side == 0 ? num.size() : den.size();
        for (std::size_t i = 0; i < len; ++i) {
            auto n2 = num, d2 = den;
            (side == 0 ? n2 : d2)[i] += 1;
            auto bad = qm::verify_schwarzian_q(RatFunc(Poly(n2), Poly(d2)), j, 40);
            ++perturbed;
            o.require(!bad.zero && *bad.first_nonzero <= 5,
                      "perturbation " + std::to_string(perturbed) + " not detected by q^5");
            if (bad.first_nonzero)
                worst = std::max(worst, *bad.first_nonzero);
        }
    }
    if (o.ok)
        o.detail = check.summary() + "; " + std::to_string(perturbed) + " perturbations detected by q^" +
                   std::to_string(worst);
    return o;
}

std::vector<sw::Signature> criterion_signatures() { return sw::hyperbolic_triangles(10); }

Outcome strong_minimality()
{
    Outcome o;
    auto rj = sw::to_normal_form(sw::classical_j_R());
    auto vj = kv::decide_liouvillian(rj);
    o.require(vj.kind == kv::Case::Four && !vj.log.empty(), "classical j not certified");
    const auto sigs = criterion_signatures();
    o.require(sigs.size() >= 47, "fewer than 47 signatures");
    std::size_t log_lines = vj.log.size();
    for (const auto& s : sigs) {
        auto r = sw::to_normal_form(sw::triangle_R(s));
        auto v = kv::decide_liouvillian(r);
        o.require(v.kind == kv::Case::Four, "(" + s.to_string() + ") is " + kv::to_string(v.kind));
        o.require(!v.log.empty() && kv::verify(v, r), "(" + s.to_string() + ") has no failure log");
        log_lines += v.log.size();
        kv::Options search_only;
        search_only.schwarz_shortcut = false;
        auto w = kv::decide_liouvillian(r, search_only);
        o.require(w.kind == kv::Case::Four, "(" + s.to_string() + ") without the Schwarz list is " +
                                                kv::to_string(w.kind));
        log_lines += w.log.size();
    }
    if (o.ok)
        o.detail = "Case 4 for j and " + std::to_string(sigs.size()) +
                   " signatures, with and without the Schwarz list; " + std::to_string(log_lines) + " log lines";
    return o;
}

Outcome fast_path()
{
    Outcome o;
    const auto sigs = criterion_signatures();
    int max_count = 0;
    for (const auto& s : sigs) {
        auto p = sw::TriangleParams::from_signature(s);
        int count = kv::half_integer_count(p);
        max_count = std::max(max_count, count);
        o.require(count <= 1, "(" + s.to_string() + ") has integer count " + std::to_string(count));
        bool fast = kv::triangle_strong_minimality(s);
        auto v = kv::decide_liouvillian(sw::to_normal_form(sw::triangle_R(s)));
        o.require(fast == (v.kind == kv::Case::Four), "paths disagree on (" + s.to_string() + ")");
    }
    if (o.ok)
        o.detail = std::to_string(sigs.size()) + " signatures agree, max integer count " + std::to_string(max_count);
    return o;
}

Outcome certificate_soundness()
{
    Outcome o;
    std::mt19937 rng(2024);
    int ones = 0, twos = 0;
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> pole(-6, 6), num(-7, 7), den(1, 4);
        RatFunc omega;
        std::vector<int> used;
        for (int k = 1 + int(rng() % 3); k > 0; --k) {
            int c = pole(rng);
            if (std::find(used.begin(), used.end(), c) != used.end())
                continue;
            used.push_back(c);
            Rational e = make_rational(num(rng), den(rng));
            omega += RatFunc(Poly{e == 0 ? Rational(1) : e}, Poly::linear(c));
        }
        if (rng() % 3 == 0)
            omega += RatFunc::constant(num(rng));
        RatFunc r = omega.derivative() + omega * omega;
        auto v = kv::decide_liouvillian(r);
        o.require(v.kind == kv::Case::One, "case 1 instance " + std::to_string(i) + " misclassified");
        if (v.case1) {
            const auto& w = v.case1->omega;
            o.require(w.derivative() + w * w == r, "case 1 certificate " + std::to_string(i) + " fails");
            ++ones;
        }
    }
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> pt(-5, 5), num(1, 6), den(1, 3);
        int a = pt(rng), b = pt(rng);
        while (b == a)
            b = pt(rng);
        RatFunc u = rng() % 2 ? RatFunc(Poly::linear(a) * Poly::linear(b)) : RatFunc(Poly::linear(a), Poly::linear(b));
        Rational c = make_rational(num(rng), den(rng));
        RatFunc h = Rational(-1, 4) * u.derivative() / u;
        RatFunc r = c * c * u + h.derivative() + h * h;
        auto v = kv::decide_liouvillian(r);
        o.require(v.kind == kv::Case::Two, "case 2 instance " + std::to_string(i) + " misclassified");
        if (v.case2) {
            o.require(kv::verify(v, r), "case 2 certificate " + std::to_string(i) + " fails");
            ++twos;
        }
    }
    if (o.ok)
        o.detail = std::to_string(ones) + " Case 1 and " + std::to_string(twos) + " Case 2 certificates re-verified";
    return o;
}

Outcome monodromy_for(const char* text)
{
    Outcome o;
    auto sig = sw::Signature::parse(text);
    auto rep = md::monodromy_report(sig, sw::to_normal_form(sw::triangle_R(sig)));
    for (const auto& l : rep.loops) {
        o.require(l.det_residual <= 1e-8, "det residual at " + l.point);
        o.require(l.trace_error <= 1e-6, "trace error at " + l.point);
    }
    o.require(rep.relation_residual <= 1e-6, "relation residual");
    o.require(rep.noncommuting, "generators commute");
    o.require(rep.signature_aligned, "loops do not match the signature");
    std::ostringstream os;
    os << "(" << text << ") det " << rep.max_det_residual << ", trace " << rep.max_trace_error << ", relation "
       << rep.relation_residual;
    if (o.ok)
        o.detail = os.str();
    return o;
}

Outcome special_polynomials()
{
    Outcome o;
    for (int N : {2, 3}) {
        auto phi = qm::compute_special_poly(N, 30);
        auto check = qm::verify_special_poly(phi, N, 30);
        const std::string tag = "Phi_" + std::to_string(N);
        o.require(check.zero, tag + ": " + check.summary());
        o.require(phi.symmetric(), tag + " not symmetric");
        o.require(qm::kronecker_congruence(phi, N), tag + " fails Kronecker's congruence");
        if (N == 2)
            o.require(phi.coeff(1, 1) == 40773375, "XY coefficient of Phi_2 is " + phi.coeff(1, 1).get_str());
    }
    if (o.ok)
        o.detail = "Phi_2 (XY coefficient 40773375) and Phi_3 vanish through q^30, symmetric, Kronecker";
    return o;
}

Outcome degree_bounds()
{
    Outcome o;
    o.require(bd::andre_pink_bound(3, 1, 1) == 2097152 && pow_chain(8, 7) == 2097152, "andre_pink_bound(3,1,1)");
    BigInt big = bd::andre_pink_bound(3, 2, 1);
    o.require(big == pow_chain(64, 63), "andre_pink_bound(3,2,1)");
    o.require(bd::decimal_digits(big) == big.get_str().size(), "digit count");
    std::cout << "    andre_pink_bound(3,2,1) = " << big.get_str() << " (" << bd::decimal_digits(big) << " digits)\n";
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> deg(1, 9), small(1, 3);
    for (int i = 0; i < 20; ++i) {
        bd::ZariskiInput in{deg(rng), deg(rng), small(rng), small(rng)};
        unsigned long two = 1UL << (in.m * in.ell);
        BigInt expected =
            pow_chain(in.deg_x, static_cast<unsigned long>(in.ell) * two) * pow_chain(in.deg_s, two - 1);
        o.require(bd::zariski_closure_bound(in) == expected, "zariski input " + std::to_string(i));
    }
    if (o.ok)
        o.detail = "8^7 = 2097152, 64^63 has 114 digits, 20 randomized Zariski inputs";
    return o;
}

Outcome schwarzian_calculus()
{
    Outcome o;
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    const int prec = 10;
    auto random_series = [&] {
        std::vector<Rational> c{0, 1};
        for (int k = 2; k < prec; ++k)
            c.push_back(make_rational(num(rng), den(rng)));
        return RationalSeries::from_coefficients(c, prec);
    };
    for (int i = 0; i < 100; ++i) {
        auto f = random_series(), g = random_series();
        auto g1 = g.derivative();
        auto lhs = sw::schwarzian_of_series(f.compose(g));
        auto rhs = sw::schwarzian_of_series(f).compose(g) * g1 * g1 + sw::schwarzian_of_series(g);
        o.require(agree(lhs, rhs), "composition identity fails on instance " + std::to_string(i));
        o.require(agree(sw::schwarzian_of_series(f), sw::schwarzian_of_series_y3(f)),
                  "the two Schwarzian forms differ on instance " + std::to_string(i));
    }
    auto t = RationalSeries::variable(14);
    auto one = RationalSeries::constant(1, 14);
    int maps = 0;
    for (int a = 1; a <= 3; ++a)
        for (int c = -2; c <= 2; ++c) {
            if (2 * a == c)
                continue;  // (a t + 1)/(c t + 2) degenerates to a constant
            ++maps;
            auto m = (t * Rational(a) + one * Rational(1)) / (t * Rational(c) + one * Rational(2));
            o.require(sw::schwarzian_of_series(m).is_zero(), "Moebius map with nonzero Schwarzian");
        }
    if (o.ok)
        o.detail = "100 compositions, " + std::to_string(maps) + " Moebius maps, both forms agree";
    return o;
}

Outcome cleared_degree()
{
    Outcome o;
    const auto sigs = criterion_signatures();
    for (const auto& s : sigs) {
        auto eq = sw::SchwarzianEquation::from_triangle(s);
        auto cf = sw::cleared_polynomial_form(eq);
        o.require(cf.total_degree == 2 * eq.singular_point_count() + 2,
                  "(" + s.to_string() + ") degree " + std::to_string(cf.total_degree));
    }
    auto j = sw::SchwarzianEquation::classical_j();
    o.require(sw::cleared_polynomial_form(j).total_degree == 2 * j.singular_point_count() + 2, "classical j");
    if (o.ok)
        o.detail = "degree 8 = 2r+2 for " + std::to_string(sigs.size()) + " signatures and j";
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        std::string name;
        double limit;  // seconds; 0 for none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "normalization identity", 1, normalization},
        {2, "ODE verification for j", 10, ode_verification},
        {3, "strong-minimality certification", 60, strong_minimality},
        {4, "triangle fast-path agreement", 5, fast_path},
        {5, "certificate soundness", 0, certificate_soundness},
        {6, "monodromy", 60,
         [] {
             Outcome o;
             for (const char* s : {"2,3,inf", "2,3,7"}) {
                 auto start = std::chrono::steady_clock::now();
                 Outcome part = monodromy_for(s);
                 double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                 o.require(part.ok, part.detail);
                 o.require(secs < 30, std::string("(") + s + ") took over 30 s");
                 if (o.ok)
                     o.detail += (o.detail.empty() ? "" : "; ") + part.detail;
             }
             return o;
         }},
        {7, "special polynomials", 60, special_polynomials},
        {8, "degree bounds", 1, degree_bounds},
        {9, "Schwarzian calculus", 0, schwarzian_calculus},
        {10, "cleared-form degree", 0, cleared_degree},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) {
            o.ok = false;
            o.detail += " (time limit " + std::to_string(int(c.limit)) + " s exceeded)";
        }
        failures += !o.ok;
        std::printf("[%s] %2d %-34s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
