#include "fuchsian/kovacic.hpp"
#include "fuchsian/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

namespace fuchsian::monodromy {

bool MonodromyReport::passed() const
{
    return max_det_residual <= 1e-8 && max_trace_error <= 1e-6 && relation_residual <= 1e-6 && noncommuting &&
           signature_aligned;
}

namespace {

struct PointInfo {
    std::string label;
    std::optional<Complex> location;  // nullopt at infinity
    std::string order;
    double target;
};

PointInfo describe(const kovacic::SingularPoint& p)
{
    PointInfo info;
    info.label = p.location.to_string();
    if (!p.location.is_infinity())
        info.location = Complex(p.location.value().get_d(), 0.0);
    // eigenvalues exp(2 pi i rho), rho = (1 +- d)/2, so trace = -2 cos(pi d)
    double d2 = p.difference_squared.get_d();
    info.target = d2 >= 0 ? std::abs(2 * std::cos(std::numbers::pi * std::sqrt(d2)))
                          : 2 * std::cosh(std::numbers::pi * std::sqrt(-d2));
    if (p.exponent_difference && *p.exponent_difference == 0)
        info.order = "inf";
    else if (p.exponent_difference && p.exponent_difference->get_num() == 1)
        info.order = p.exponent_difference->get_den().get_str();
    else
        info.order = "1/(" + p.difference_squared.get_str() + ")^(1/2)";
    return info;
}

std::vector<PointInfo> singular_info(const RatFunc& r)
{
    std::vector<PointInfo> out;
    for (const auto& p : kovacic::classify_singularities(r))
        if (p.tag != kovacic::PointTag::Regular)
            out.push_back(describe(p));
    return out;
}

std::vector<Complex> finite_points(const std::vector<PointInfo>& pts)
{
    std::vector<Complex> out;
    for (const auto& p : pts)
        if (p.location)
            out.push_back(*p.location);
    return out;
}

bool close(const std::array<Complex, 2>& a, const std::array<Complex, 2>& b)
{
    double scale = 1 + std::max(std::abs(a[0]) + std::abs(a[1]), std::abs(b[0]) + std::abs(b[1]));
    return std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]) <= 1e-6 * scale;
}

std::string word_name(const std::vector<int>& w, std::size_t ngen)
{
    std::string s;
    for (int g : w) {
        if (!s.empty())
            s += " ";
        std::size_t i = static_cast<std::size_t>(g) % ngen;
        s += "M" + std::to_string(i + 1) + (static_cast<std::size_t>(g) >= ngen ? "^-1" : "");
    }
    return s;
}

}  // namespace

OrbitEvidence orbit_growth(const std::vector<Matrix2C>& generators, int max_length, std::size_t cap)
{
    std::vector<Matrix2C> gens = generators;
    for (const auto& g : generators)
        gens.push_back(g.inverse());
    std::vector<std::array<Complex, 2>> seen{{Complex(0.6, 0.3), Complex(-0.2, 0.8)}};
    std::vector<std::array<Complex, 2>> frontier = seen;
    OrbitEvidence ev;
    for (int len = 1; len <= max_length && !frontier.empty(); ++len) {
        std::vector<std::array<Complex, 2>> next;
        for (const auto& v : frontier) {
            for (const auto& g : gens) {
                std::array<Complex, 2> w{g.a[0] * v[0] + g.a[1] * v[1], g.a[2] * v[0] + g.a[3] * v[1]};
                if (std::none_of(seen.begin(), seen.end(), [&](const auto& u) { return close(u, w); })) {
                    seen.push_back(w);
                    next.push_back(w);
                    if (seen.size() >= cap) {
                        ev.size = seen.size();
                        ev.word_length = len;
                        return ev;
                    }
                }
            }
        }
        ev.word_length = len;
        frontier = std::move(next);
    }
    ev.size = seen.size();
    ev.saturated = frontier.empty();
    return ev;
}

std::vector<Matrix2C> monodromy_generators(const RatFunc& r, double tol, std::optional<Complex> base)
{
    auto pts = singular_info(r);
    auto finite = finite_points(pts);
    Complex b = base.value_or(default_base(finite));
    NumericRatFunc f(r);
    auto coeff = [&f](Complex y) { return f(y); };
    std::vector<Matrix2C> out;
    for (const auto& loop : standard_loops(finite, b))
        out.push_back(integrate_ode_along(coeff, loop, tol, finite));
    if (finite.size() < pts.size())
        out.push_back(integrate_ode_along(coeff, enclosing_loop(finite, b), tol, finite).inverse());
    return out;
}

MonodromyReport monodromy_report(const schwarzian::Signature& sig, const RatFunc& r, const ReportOptions& opts)
{
    MonodromyReport rep;
    rep.tolerance = opts.tol;
    const auto pts = singular_info(r);
    const auto finite = finite_points(pts);
    rep.base = opts.base.value_or(default_base(finite));

    std::vector<std::string> want, have;
    for (const auto& o : sig.orders())
        want.push_back(o.to_string());
    for (const auto& p : pts)
        have.push_back(p.order);
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    rep.signature_aligned = want == have;

    NumericRatFunc f(r);
    const Coefficient coeff = [&f](Complex y) { return f(y); };
    const auto loops = standard_loops(finite, rep.base);
    const PathLoop big = enclosing_loop(finite, rep.base);

    std::vector<std::future<std::pair<Matrix2C, long>>> jobs;
    auto launch = [&](const PathLoop& loop) {
        return std::async(std::launch::async, [&coeff, &finite, &loop, tol = opts.tol] {
            IntegrationStats st;
            Matrix2C m = integrate_ode_along(coeff, loop, tol, finite, &st);
            return std::make_pair(m, st.steps);
        });
    };
    for (const auto& loop : loops)
        jobs.push_back(launch(loop));
    jobs.push_back(launch(big));

    Matrix2C product = Matrix2C::identity();
    std::vector<Matrix2C> mats;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        auto [m, steps] = jobs[i].get();
        const Complex at = *loops[i].encircled;
        auto it = std::find_if(pts.begin(), pts.end(), [&](const PointInfo& p) { return p.location == at; });
        LoopResult lr{it->label, it->order, m, std::abs(m.trace()), it->target, 0, 0, loops[i].clearance, steps};
        lr.trace_error = std::abs(lr.trace_abs - lr.target);
        lr.det_residual = std::abs(m.det() - 1.0);
        rep.loops.push_back(lr);
        product = product * m;
        mats.push_back(m);
    }
    auto [big_m, big_steps] = jobs.back().get();
    const Matrix2C m_inf = big_m.inverse();
    rep.infinity_by_product = product.inverse();
    rep.infinity_agreement = (m_inf - rep.infinity_by_product).norm();
    const Matrix2C rel = product * m_inf;
    double plus = (rel - Matrix2C::identity()).norm(), minus = (rel + Matrix2C::identity()).norm();
    rep.relation_residual = std::min(plus, minus);
    rep.relation_sign = plus <= minus ? 1 : -1;

    auto inf_it = std::find_if(pts.begin(), pts.end(), [](const PointInfo& p) { return !p.location; });
    if (inf_it != pts.end()) {
        LoopResult lr{"inf", inf_it->order, m_inf, std::abs(m_inf.trace()), inf_it->target, 0, 0, big.clearance,
                      big_steps};
        lr.trace_error = std::abs(lr.trace_abs - lr.target);
        lr.det_residual = std::abs(m_inf.det() - 1.0);
        rep.loops.push_back(lr);
        mats.push_back(m_inf);
    }
    for (const auto& lr : rep.loops) {
        rep.max_det_residual = std::max(rep.max_det_residual, lr.det_residual);
        rep.max_trace_error = std::max(rep.max_trace_error, lr.trace_error);
    }

    for (std::size_t a = 0; a < mats.size(); ++a)
        for (std::size_t b = a + 1; b < mats.size(); ++b)
            rep.commutator_norm = std::max(rep.commutator_norm, (mats[a] * mats[b] - mats[b] * mats[a]).norm());
    rep.noncommuting = rep.commutator_norm > 1e-3;

    // breadth-first over words of length <= 6 in the finite-loop generators
    std::vector<Matrix2C> gens;
    for (std::size_t i = 0; i < loops.size(); ++i)
        gens.push_back(mats[i]);
    const std::size_t ngen = gens.size();
    for (std::size_t i = 0; i < ngen; ++i)
        gens.push_back(mats[i].inverse());
    std::vector<std::pair<std::vector<int>, Matrix2C>> layer{{{}, Matrix2C::identity()}};
    for (int len = 1; len <= 6 && !rep.hyperbolic_found; ++len) {
        std::vector<std::pair<std::vector<int>, Matrix2C>> next;
        for (const auto& [w, m] : layer) {
            for (std::size_t g = 0; g < gens.size() && !rep.hyperbolic_found; ++g) {
                Matrix2C mg = m * gens[g];
                std::vector<int> wg = w;
                wg.push_back(static_cast<int>(g));
                double t = std::abs(mg.trace());
                if (t > 2 + 1e-6) {
                    rep.hyperbolic_found = true;
                    rep.hyperbolic_word = word_name(wg, ngen);
                    rep.hyperbolic_trace = t;
                }
                next.emplace_back(std::move(wg), mg);
            }
        }
        layer = std::move(next);
    }
    return rep;
}

Json matrix_json(const Matrix2C& m)
{
    Json out = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 2; ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        out.push_back(row);
    }
    return out;
}

Json report_json(const MonodromyReport& rep)
{
    Json j;
    j["base"] = {rep.base.real(), rep.base.imag()};
    j["tolerance"] = rep.tolerance;
    Json loops = Json::array();
    for (const auto& lr : rep.loops) {
        loops.push_back({{"point", lr.point},
                         {"order", lr.order},
                         {"matrix", matrix_json(lr.matrix)},
                         {"trace_abs", lr.trace_abs},
                         {"target", lr.target},
                         {"trace_error", lr.trace_error},
                         {"det_residual", lr.det_residual},
                         {"clearance", lr.clearance},
                         {"steps", lr.steps}});
    }
    j["loops"] = loops;
    j["infinity_by_product"] = matrix_json(rep.infinity_by_product);
    j["infinity_agreement"] = rep.infinity_agreement;
    j["relation_residual"] = rep.relation_residual;
    j["relation_sign"] = rep.relation_sign;
    j["max_det_residual"] = rep.max_det_residual;
    j["max_trace_error"] = rep.max_trace_error;
    j["commutator_norm"] = rep.commutator_norm;
    j["noncommuting"] = rep.noncommuting;
    j["hyperbolic_found"] = rep.hyperbolic_found;
    j["hyperbolic_word"] = rep.hyperbolic_word;
    j["hyperbolic_trace"] = rep.hyperbolic_trace;
    j["signature_aligned"] = rep.signature_aligned;
    j["passed"] = rep.passed();
    return j;
}

}  // namespace fuchsian::monodromy
