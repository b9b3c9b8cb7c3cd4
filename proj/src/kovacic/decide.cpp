#include "fuchsian/kovacic.hpp"

namespace fuchsian::kovacic {

std::string to_string(Case c)
{
    switch (c) {
    case Case::One:
        return "Case1";
    case Case::Two:
        return "Case2";
    case Case::Three:
        return "Case3";
    case Case::Four:
        return "Case4";
    case Case::Undetermined3:
        return "Undetermined3";
    }
    return "?";
}

KovacicVerdict decide_liouvillian(const RatFunc& r, const Options& opts)
{
    KovacicVerdict v;
    if ((v.case1 = case1(r, &v.log))) {
        v.kind = Case::One;
        return v;
    }
    if ((v.case2 = case2(r, &v.log))) {
        v.kind = Case::Two;
        return v;
    }
    Case3Outcome c3 = case3(r, opts, &v.log);
    if (c3.present()) {
        v.kind = Case::Three;
        v.case3 = std::move(c3.certificate);
        v.schwarz = std::move(c3.schwarz);
        return v;
    }
    v.kind = c3.undetermined ? Case::Undetermined3 : Case::Four;
    return v;
}

RicResult condition_ric(const schwarzian::SchwarzianEquation& eq, const Options& opts)
{
    RicResult res;
    res.verdict = decide_liouvillian(schwarzian::to_normal_form(eq), opts);
    switch (res.verdict.kind) {
    case Case::Four:
        res.holds = Ternary::Yes;
        res.label = "strongly minimal (Condition Ric certified)";
        break;
    case Case::Undetermined3:
        res.holds = Ternary::Unknown;
        res.label = "unknown (case 3 undetermined)";
        break;
    default:
        res.holds = Ternary::No;
        res.label = "Condition Ric fails (" + to_string(res.verdict.kind) + " Liouvillian solution)";
        break;
    }
    return res;
}

namespace {

Json rf_list(const std::vector<RatFunc>& v)
{
    Json out = Json::array();
    for (const auto& f : v)
        out.push_back(ratfunc_json(f));
    return out;
}

}  // namespace

Json verdict_json(const KovacicVerdict& v)
{
    Json j;
    if (v.kind == Case::Undetermined3)
        j["case"] = nullptr;
    else
        j["case"] = static_cast<int>(v.kind);
    j["outcome"] = to_string(v.kind);
    Json cert = Json::object();
    if (v.case1) {
        cert["omega"] = ratfunc_json(v.case1->omega);
        cert["family_omega"] = ratfunc_json(v.case1->family_omega);
        cert["P"] = poly_json(v.case1->P);
    }
    if (v.case2) {
        cert["theta"] = ratfunc_json(v.case2->theta);
        cert["P"] = poly_json(v.case2->P);
        cert["phi"] = ratfunc_json(v.case2->phi);
        cert["quadratic"] = rf_list({v.case2->quadratic.begin(), v.case2->quadratic.end()});
    }
    if (v.schwarz)
        cert["schwarz_row"] = v.schwarz->row;
    if (v.case3) {
        cert["n"] = v.case3->n;
        cert["minimal_polynomial"] = rf_list(v.case3->polynomial);
    }
    j["certificate"] = cert;
    j["log"] = v.log;
    return j;
}

}  // namespace fuchsian::kovacic
