// Command-line front end: derive, minimality, monodromy, verify-j,
// special-poly, bound. Results go to stdout (JSON with --json), diagnostics to
// stderr. Exit status: 0 when every requested check passes, 1 when a check
// fails, 2 on invalid input.

#include "fuchsian/bounds.hpp"
#include "fuchsian/kovacic.hpp"
#include "fuchsian/monodromy.hpp"
#include "fuchsian/qmodular.hpp"
#include "fuchsian/schwarzian.hpp"
#include "fuchsian/schwarzian_json.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace fuchsian;
namespace sw = fuchsian::schwarzian;
namespace kv = fuchsian::kovacic;
namespace md = fuchsian::monodromy;
namespace qm = fuchsian::qmodular;
namespace bd = fuchsian::bounds;

namespace {

struct Source {
    std::string triangle;
    bool classical_j = false;
    std::string R;
    std::string r;

    int count() const
    {
        return int(!triangle.empty()) + int(classical_j) + int(!R.empty()) + int(!r.empty());
    }
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

sw::SchwarzianEquation equation_of(const Source& s)
{
    if (s.classical_j)
        return sw::SchwarzianEquation::classical_j();
    return sw::SchwarzianEquation::from_triangle(sw::Signature::parse(s.triangle));
}

std::string describe(const Source& s)
{
    if (s.classical_j)
        return "classical j";
    if (!s.triangle.empty())
        return "triangle (" + sw::Signature::parse(s.triangle).to_string() + ")";
    if (!s.R.empty())
        return "R = " + s.R;
    return "normal form r = " + s.r;
}

Json inputs_json(const Source& s)
{
    Json j = Json::object();
    if (s.classical_j)
        j["classical_j"] = true;
    if (!s.triangle.empty())
        j["triangle"] = s.triangle;
    if (!s.R.empty())
        j["R"] = s.R;
    if (!s.r.empty())
        j["r"] = s.r;
    return j;
}

void emit(bool json, Json doc, const std::string& text)
{
    if (json) {
        doc["exit_status"] = doc.value("passed", false) ? 0 : 1;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// num/den with integer coefficients and the denominator split into its
// rational linear factors, e.g. (36*y^2 - 41*y + 32)/(36*y^2*(y - 1)^2).
std::string factored(const RatFunc& f)
{
    if (f.is_zero())
        return "0";
    BigInt scale = 1;
    for (const Poly* p : {&f.num(), &f.den()})
        for (const auto& c : p->coeffs())
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    BigInt g = 0;
    for (const Poly* p : {&f.num(), &f.den()})
        for (const auto& c : p->coeffs())
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(c * scale).get_mpz_t());
    const Rational k = make_rational(scale, g);
    const Poly num = f.num() * k;
    if (f.den().degree() == 0)
        return num.to_string();

    const Poly den_poly = f.den() * k;
    auto fac = squarefree_and_roots(den_poly);
    std::vector<std::string> parts;
    if (fac.leading != 1)
        parts.push_back(to_string(fac.leading));
    auto power = [](const std::string& base, int m) { return m == 1 ? base : base + "^" + std::to_string(m); };
    Poly rest = den_poly.monic();
    for (const auto& root : fac.roots) {
        parts.push_back(root.value == 0 ? power("y", root.multiplicity)
                                        : power("(" + Poly::linear(root.value).to_string() + ")", root.multiplicity));
        rest = divmod(rest, pow(Poly::linear(root.value), root.multiplicity)).first;
    }
    if (rest.degree() > 0)
        for (const auto& sq : squarefree_decomposition(rest))
            parts.push_back(power("(" + sq.factor.to_string() + ")", sq.multiplicity));
    std::string den;
    for (const auto& part : parts)
        den += (den.empty() ? "" : "*") + part;
    const bool bare = num.coeffs().size() == 1 || (num.degree() == 1 && num.coeff(0) == 0);
    return (bare ? num.to_string() : "(" + num.to_string() + ")") + "/(" + den + ")";
}

std::string case_name(kv::Case c)
{
    return c == kv::Case::Undetermined3 ? "case 3 undetermined" : "Case " + std::to_string(int(c));
}

std::string fmt(double v, int digits = 12)
{
    std::ostringstream os;
    os << std::setprecision(digits) << (std::abs(v) < 1e-15 ? 0.0 : v);
    return os.str();
}

// ---------------------------------------------------------------- derive

int cmd_derive(const Source& src, bool json)
{
    if (src.count() != 1 || !src.R.empty() || !src.r.empty())
        throw InputError("derive needs exactly one of --triangle or --classical-j");
    const auto eq = equation_of(src);
    const RatFunc r = sw::to_normal_form(eq);
    const RatFunc q = sw::to_riccati(eq);
    const auto cleared = sw::cleared_polynomial_form(eq);
    const int expected = 2 * eq.singular_point_count() + 2;
    const bool ok = cleared.total_degree == expected;

    Json doc;
    doc["command"] = "derive";
    doc["inputs"] = inputs_json(src);
    doc["equation"] = sw::equation_json(eq);
    doc["signature"] = eq.signature().to_string();
    doc["R_text"] = factored(eq.R());
    doc["normal_form"] = {{"r", ratfunc_json(r)}, {"text", factored(r)}};
    doc["riccati"] = {{"q", ratfunc_json(q)}, {"text", "u' + u^2 + " + factored(q) + " = 0"}};
    doc["cleared_form"] = {{"polynomial", cleared.poly.to_string()},
                           {"total_degree", cleared.total_degree},
                           {"expected_degree", expected},
                           {"chart_shift", cleared.chart_shift ? rational_json(*cleared.chart_shift) : Json(nullptr)},
                           {"affine_polynomial", cleared.affine_poly.to_string()},
                           {"affine_degree", cleared.affine_degree}};
    doc["passed"] = ok;

    std::ostringstream os;
    os << "equation: " << describe(src) << ", signature (" << eq.signature().to_string() << ")\n";
    for (std::size_t i = 0; i < eq.points().size(); ++i)
        os << "  point " << eq.points()[i].to_string() << ": angle " << to_string(eq.angles()[i]) << ", accessory "
           << to_string(eq.accessory()[i]) << "\n";
    os << "R(y) = " << factored(eq.R()) << "\n";
    os << "normal form z'' = r z, r = " << factored(r) << "\n";
    os << "Riccati u' + u^2 + q = 0, q = " << factored(q) << "\n";
    if (cleared.chart_shift)
        os << "cleared form in the chart w = 1/(" << Poly::linear(*cleared.chart_shift).to_string()
           << "), with w written as y: ";
    else
        os << "cleared form: ";
    os << cleared.poly.to_string() << "\n  (y1, y2, y3 stand for the first three derivatives)\n";
    os << "cleared degree " << cleared.total_degree << " (2r+2 = " << expected << ")"
       << (ok ? "" : "  MISMATCH") << "; degree " << cleared.affine_degree << " in the original coordinate\n";
    emit(json, doc, os.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- minimality

int cmd_minimality(const Source& src, bool fast_path, bool no_schwarz, bool no_search, bool verbose, bool json)
{
    if (src.count() != 1)
        throw InputError("minimality needs exactly one of --triangle, --classical-j, --R or --r");
    const RatFunc r = !src.r.empty() ? parse_ratfunc(src.r)
                      : !src.R.empty() ? sw::to_normal_form(parse_ratfunc(src.R))
                                       : sw::to_normal_form(equation_of(src).R());
    kv::Options opts;
    opts.schwarz_shortcut = !no_schwarz;
    opts.case3_search = !no_search;

    kv::KovacicVerdict verdict = kv::decide_liouvillian(r, opts);
    const bool verified = kv::verify(verdict, r);
    std::string answer, label;
    Json ric;
    switch (verdict.kind) {
    case kv::Case::Four:
        answer = "yes";
        label = "strongly minimal (Condition Ric certified)";
        ric = true;
        break;
    case kv::Case::Undetermined3:
        answer = "unknown";
        label = "unknown (case 3 undetermined)";
        ric = nullptr;
        break;
    default:
        answer = "no";
        label = "Condition Ric fails";
        ric = false;
        break;
    }
    bool ok = verified && verdict.kind == kv::Case::Four;

    Json doc;
    doc["command"] = "minimality";
    doc["inputs"] = inputs_json(src);
    doc["r"] = ratfunc_json(r);
    doc["singular_points"] = kv::singular_points_json(kv::classify_singularities(r));
    doc["fuchsian"] = kv::is_fuchsian(r);
    doc["verdict"] = kv::verdict_json(verdict);
    doc["certificate_verified"] = verified;
    doc["condition_ric"] = ric;
    doc["label"] = label;

    std::ostringstream os;
    os << "equation: " << describe(src) << "\n";
    os << "normal form r = " << factored(r) << "\n";
    os << "strongly minimal: " << answer << " (" << case_name(verdict.kind) << ")\n";
    if (verdict.case1)
        os << "  witness omega = " << verdict.case1->omega.to_string() << " (z = exp(int omega))\n";
    if (verdict.case2)
        os << "  witness: omega^2 - phi omega + psi = 0 with phi = " << verdict.case2->phi.to_string() << "\n";
    if (verdict.schwarz)
        os << "  Schwarz list: " << verdict.schwarz->description << "\n";
    if (verdict.case3)
        os << "  algebraic Riccati solution of degree " << verdict.case3->n << "\n";
    os << "  " << label << "; certificate re-verified: " << (verified ? "yes" : "NO") << "\n";
    os << "  candidates examined: " << verdict.log.size() << " log lines\n";
    if (verbose)
        for (const auto& line : verdict.log)
            os << "    " << line << "\n";

    if (fast_path) {
        if (src.triangle.empty())
            throw InputError("--fast-path needs --triangle");
        const auto sig = sw::Signature::parse(src.triangle);
        const auto p = sw::TriangleParams::from_signature(sig);
        const bool reducible = kv::triangle_reducibility(p);
        const int halves = kv::half_integer_count(p);
        const bool fast = kv::triangle_strong_minimality(sig);
        const bool agree = fast == (verdict.kind == kv::Case::Four);
        ok = ok && agree;
        doc["fast_path"] = {{"reducible", reducible},
                            {"half_integer_count", halves},
                            {"strongly_minimal", fast},
                            {"agrees_with_kovacic", agree}};
        os << "fast path: reducible " << (reducible ? "yes" : "no") << ", integers among lambda-1/2, mu-1/2, nu-1/2: "
           << halves << ", strongly minimal " << (fast ? "yes" : "no") << "\n";
        os << "agreement of both paths: " << (agree ? "yes" : "NO") << "\n";
    }
    doc["passed"] = ok;
    emit(json, doc, os.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- monodromy

md::Complex parse_complex(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw InputError("complex numbers are written re,im");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InputError("cannot parse complex number \"" + s + "\"");
    }
}

int cmd_monodromy_exponents(const std::string& text, double tol, bool json)
{
    std::vector<Rational> e;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        e.push_back(parse_rational(item));
    if (e.size() != 3)
        throw InputError("--exponents takes three exponent differences");
    if (kv::hypergeometric_reducible(e[0], e[1], e[2]))
        throw InputError("exponent differences give a reducible equation");
    const RatFunc r = sw::to_normal_form(sw::hypergeometric_R(e[0], e[1], e[2]));
    const auto gens = md::monodromy_generators(r, tol);
    const auto orbit = md::orbit_growth(gens, 12);
    const auto row = kv::schwarz_list_match(e[0], e[1], e[2]);
    const bool listed = row.has_value();
    const bool ok = orbit.saturated == listed;

    Json doc;
    doc["command"] = "monodromy";
    doc["inputs"] = {{"exponents", text}, {"tol", tol}};
    Json g = Json::array();
    for (const auto& m : gens)
        g.push_back(md::matrix_json(m));
    doc["generators"] = g;
    doc["orbit"] = {{"size", orbit.size}, {"saturated", orbit.saturated}, {"word_length", orbit.word_length}};
    doc["schwarz_row"] = listed ? Json(row->row) : Json(nullptr);
    doc["passed"] = ok;

    std::ostringstream os;
    os << "exponent differences (" << text << ")\n";
    os << "orbit of a vector under words of length <= 12: " << orbit.size << " vectors, "
       << (orbit.saturated ? "saturated (finite group evidence)" : "still growing") << "\n";
    os << "Schwarz list: " << (listed ? row->description : std::string("not listed")) << "\n";
    os << "agreement: " << (ok ? "yes" : "NO") << "\n";
    emit(json, doc, os.str());
    return ok ? 0 : 1;
}

int cmd_monodromy(const Source& src, const std::string& exponents, double tol, const std::string& base, bool json)
{
    if (!exponents.empty())
        return cmd_monodromy_exponents(exponents, tol, json);
    if (src.count() != 1 || !src.R.empty() || !src.r.empty())
        throw InputError("monodromy needs exactly one of --triangle, --classical-j or --exponents");
    const auto eq = equation_of(src);
    md::ReportOptions opts;
    opts.tol = tol;
    if (!base.empty())
        opts.base = parse_complex(base);
    const auto rep = md::monodromy_report(eq.signature(), sw::to_normal_form(eq), opts);

    Json doc;
    doc["command"] = "monodromy";
    doc["inputs"] = inputs_json(src);
    doc["inputs"]["tol"] = tol;
    doc["report"] = md::report_json(rep);
    doc["passed"] = rep.passed();

    std::ostringstream os;
    os << "equation: " << describe(src) << ", base point " << rep.base.real() << (rep.base.imag() < 0 ? "" : "+")
       << rep.base.imag() << "i, tolerance " << tol << "\n";
    for (const auto& lr : rep.loops)
        os << "  loop around " << lr.point << " (order " << lr.order << "): |trace| = " << fmt(lr.trace_abs)
           << ", target " << fmt(lr.target) << ", error " << fmt(lr.trace_error, 3) << ", |det - 1| = "
           << fmt(lr.det_residual, 3) << "\n";
    os << "  relation M_1 ... M_n M_inf = " << (rep.relation_sign > 0 ? "+" : "-") << "I within "
       << fmt(rep.relation_residual, 3) << "\n";
    os << "  non-commuting pair: " << (rep.noncommuting ? "yes" : "no") << " (max |[A,B]| = "
       << fmt(rep.commutator_norm, 6) << ")\n";
    if (rep.hyperbolic_found)
        os << "  hyperbolic element: " << rep.hyperbolic_word << ", |trace| = " << fmt(rep.hyperbolic_trace) << "\n";
    else
        os << "  hyperbolic element: none among words of length <= 6\n";
    os << (rep.passed() ? "all monodromy checks pass\n" : "monodromy checks FAILED\n");
    emit(json, doc, os.str());
    return rep.passed() ? 0 : 1;
}

// ---------------------------------------------------------------- verify-j

int cmd_verify_j(int order, int truncation, bool json)
{
    if (order < 0)
        throw InputError("--order must be non-negative");
    if (truncation <= 0)
        truncation = order + 20;
    const auto j = qm::j_series(truncation);
    const auto check_j = qm::verify_schwarzian_q(sw::classical_j_R(), j, order);
    const auto h = j * Rational(1, 1728);
    const auto check_h = qm::verify_schwarzian_q(sw::triangle_R(sw::Signature::parse("2,3,inf")), h, order);
    const bool ok = check_j.zero && check_h.zero;

    Json head = Json::array();
    for (int k = -1; k <= 4; ++k)
        head.push_back(j.coeff(k).get_str());
    Json doc;
    doc["command"] = "verify-j";
    doc["inputs"] = {{"order", order}, {"truncation", truncation}};
    doc["j_head"] = head;
    auto check_json = [](const qm::ResidualCheck& c) {
        return Json{{"zero", c.zero},
                    {"first_nonzero", c.first_nonzero ? Json(*c.first_nonzero) : Json(nullptr)},
                    {"summary", c.summary()}};
    };
    doc["classical_j"] = check_json(check_j);
    doc["triangle_2_3_inf"] = check_json(check_h);
    doc["passed"] = ok;

    std::ostringstream os;
    os << "j = q^-1 + " << j.coeff(0).get_str() << " + " << j.coeff(1).get_str() << " q + " << j.coeff(2).get_str()
       << " q^2 + ...\n";
    os << "classical j with R_j: " << check_j.summary() << "\n";
    os << "j/1728 with R of (2,3,inf): " << check_h.summary() << "\n";
    emit(json, doc, os.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- special-poly

int cmd_special_poly(int level, int order, int truncation, bool text_only, bool allow_large, bool json)
{
    if (level != 2 && level != 3 && !allow_large)
        throw InputError("levels other than 2 and 3 need --allow-large");
    if (truncation <= 0)
        truncation = order;
    const auto phi = qm::compute_special_poly(level, truncation);
    const auto residual = qm::verify_special_poly(phi, level, order);
    const bool sym = phi.symmetric();
    const bool content_one = phi.content() == 1;
    bool prime = level > 1;
    for (int p = 2; p * p <= level; ++p)
        if (level % p == 0)
            prime = false;
    const Json kron = prime ? Json(qm::kronecker_congruence(phi, level)) : Json(nullptr);
    const bool ok = residual.zero && sym && content_one && (!prime || kron.get<bool>());

    if (text_only) {
        std::cout << phi.to_text() << "\n";
        return ok ? 0 : 1;
    }
    Json doc;
    doc["command"] = "special-poly";
    doc["inputs"] = {{"level", level}, {"order", order}, {"truncation", truncation}};
    doc["polynomial"] = qm::special_poly_json(phi);
    doc["checks"] = {{"symmetric", sym}, {"content_one", content_one}, {"kronecker", kron},
                     {"residual", residual.summary()}, {"residual_zero", residual.zero}};
    doc["passed"] = ok;

    std::ostringstream os;
    os << "Phi_" << level << "(X, Y) = " << phi.to_text() << "\n";
    os << "symmetric: " << (sym ? "yes" : "no") << ", content 1: " << (content_one ? "yes" : "no") << "\n";
    if (prime)
        os << "Kronecker congruence mod " << level << ": " << (kron.get<bool>() ? "holds" : "FAILS") << "\n";
    os << "Phi(j(q), j(q^" << level << ")): " << residual.summary() << "\n";
    emit(json, doc, os.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- bound

int cmd_bound(bool andre_pink, bool zariski, long r, long n, long deg_v, const bd::ZariskiInput& z, bool json)
{
    if (andre_pink == zariski)
        throw InputError("choose exactly one of --andre-pink or --zariski");
    BigInt value;
    double estimate;
    Json inputs;
    std::string formula;
    if (andre_pink) {
        value = bd::andre_pink_bound(r, n, deg_v);
        estimate = bd::andre_pink_log10(r, n, deg_v);
        inputs = {{"r", r}, {"n", n}, {"degV", deg_v}};
        formula = "((2r+2)^n degV)^(2^(3n)-1)";
    } else {
        value = bd::zariski_closure_bound(z);
        estimate = bd::zariski_closure_log10(z);
        inputs = {{"degX", z.deg_x}, {"degS", z.deg_s}, {"m", z.m}, {"ell", z.ell}};
        formula = "degX^(ell 2^(m ell)) degS^(2^(m ell)-1)";
    }
    const std::string digits = value.get_str();
    Json doc;
    doc["command"] = "bound";
    doc["bound"] = andre_pink ? "andre-pink" : "zariski";
    doc["inputs"] = inputs;
    doc["formula"] = formula;
    doc["value"] = digits;
    doc["digits"] = digits.size();
    doc["log10_estimate"] = estimate;
    doc["passed"] = true;
    std::ostringstream os;
    os << digits << "\n" << "digits: " << digits.size() << "\n";
    emit(json, doc, os.str());
    return 0;
}

void add_source(CLI::App* sub, Source& src, bool with_R)
{
    sub->add_option("--triangle", src.triangle, "triangle signature, e.g. 2,3,inf");
    sub->add_flag("--classical-j", src.classical_j, "the equation of the classical j-function");
    if (with_R)
    {
        sub->add_option("--R", src.R, "Schwarzian coefficient R(y) as an expression in y");
        sub->add_option("--r", src.r, "normal form coefficient r(y) of z'' = r z");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schwarzian equations of triangle uniformizers: derivation, strong minimality, monodromy, "
                 "q-expansions, degree bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false, timing = false;
    app.add_flag("--json", json, "machine-readable output on stdout");
    app.add_flag("--timing", timing, "report wall time on stderr");

    Source src;
    auto* derive = app.add_subcommand("derive", "R, normal form, Riccati equation and cleared form");
    add_source(derive, src, false);

    bool fast_path = false, no_schwarz = false, no_search = false, verbose = false;
    auto* minimality = app.add_subcommand("minimality", "decide Condition (Ric) with Kovacic's algorithm");
    add_source(minimality, src, true);
    minimality->add_flag("--fast-path", fast_path, "also run the hypergeometric exponent test (triangles)");
    minimality->add_flag("--no-schwarz", no_schwarz, "decide case 3 by the auxiliary-polynomial search only");
    minimality->add_flag("--no-case3-search", no_search, "skip the case 3 search (may give Undetermined3)");
    minimality->add_flag("-v,--verbose", verbose, "print every candidate examined");

    double tol = 1e-12;
    std::string base, exponents;
    auto* mono = app.add_subcommand("monodromy", "numerical monodromy along standard loops");
    add_source(mono, src, false);
    mono->add_option("--exponents", exponents, "finite-group check for exponent differences, e.g. 1/2,1/3,1/3");
    mono->add_option("--tol", tol, "integrator tolerance")->check(CLI::PositiveNumber);
    mono->add_option("--base", base, "base point re,im");

    int order = 40, truncation = 0;
    auto* verify_j = app.add_subcommand("verify-j", "check the Schwarzian equation of j on its q-expansion");
    verify_j->add_option("--order", order, "check coefficients through q^order");
    verify_j->add_option("--truncation", truncation, "length of the j expansion (default order + 20)");

    int level = 2, poly_order = 30, poly_trunc = 0;
    bool text_only = false, allow_large = false;
    auto* special = app.add_subcommand("special-poly", "modular polynomial Phi_N by linear algebra on q-series");
    special->add_option("-N,--level", level, "level N");
    special->add_option("--order", poly_order, "verify Phi(j(q), j(q^N)) through q^order");
    special->add_option("--truncation", poly_trunc, "q-adic truncation of the linear system (default: order)");
    special->add_flag("--text", text_only, "print only the polynomial in lexicographic term order");
    special->add_flag("--allow-large", allow_large, "permit levels other than 2 and 3");

    bool andre_pink = false, zariski = false;
    long r = 3, n = 1, deg_v = 1;
    bd::ZariskiInput z;
    auto* bound = app.add_subcommand("bound", "exact degree bounds");
    bound->add_flag("--andre-pink", andre_pink, "((2r+2)^n degV)^(2^(3n)-1)");
    bound->add_flag("--zariski", zariski, "degX^(ell 2^(m ell)) degS^(2^(m ell)-1)");
    bound->add_option("-r", r, "number of singular points");
    bound->add_option("-n", n, "ambient power");
    bound->add_option("--degV", deg_v, "degree of V");
    bound->add_option("--degX", z.deg_x, "degree of X");
    bound->add_option("--degS", z.deg_s, "degree of S");
    bound->add_option("-m", z.m, "ambient dimension");
    bound->add_option("--ell", z.ell, "prolongation order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int status = 2;
    try {
        if (*derive)
            status = cmd_derive(src, json);
        else if (*minimality)
            status = cmd_minimality(src, fast_path, no_schwarz, no_search, verbose, json);
        else if (*mono)
            status = cmd_monodromy(src, exponents, tol, base, json);
        else if (*verify_j)
            status = cmd_verify_j(order, truncation, json);
        else if (*special)
            status = cmd_special_poly(level, poly_order, poly_trunc, text_only, allow_large, json);
        else if (*bound)
            status = cmd_bound(andre_pink, zariski, r, n, deg_v, z, json);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    if (timing)
        std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                  << " s\n";
    return status;
}
