#include "freeaut/report.hpp"

#include "freeaut/parse.hpp"

namespace freeaut {

namespace {

std::string reason_tag(StuckReason r) {
    return r == StuckReason::NeitherLeadingDivides ? "neither-leading-form-divides"
                                                   : "nonconstant-with-zero-partner";
}

StuckReason reason_from_tag(const std::string& s) {
    if (s == "neither-leading-form-divides") return StuckReason::NeitherLeadingDivides;
    if (s == "nonconstant-with-zero-partner") return StuckReason::ZeroPartner;
    raise(Errc::Parse, "unknown stuck reason: " + s);
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

} // namespace

Json step_to_json(const ElemStep& s) {
    switch (s.kind) {
        case StepKind::E12: return Json{{"kind", "e12"}, {"q", s.q.str()}};
        case StepKind::E21: return Json{{"kind", "e21"}, {"q", s.q.str()}};
        case StepKind::Diag:
            return Json{{"kind", "diag"}, {"alpha", s.alpha.str()}, {"beta", s.beta.str()}};
    }
    raise(Errc::Internal, "bad step kind");
}

ElemStep step_from_json(const Json& j, const Ctx& ctx) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "e12") return ElemStep::e12(parse_cpoly(j.at("q").get<std::string>(), ctx));
    if (kind == "e21") return ElemStep::e21(parse_cpoly(j.at("q").get<std::string>(), ctx));
    if (kind == "diag")
        return ElemStep::diag(ctx, Rational::from_string(j.at("alpha").get<std::string>()),
                              Rational::from_string(j.at("beta").get<std::string>()));
    raise(Errc::Parse, "unknown step kind: " + kind);
}

Json certificate_to_json(const Certificate& cert) {
    Json steps = Json::array();
    for (const auto& s : cert.steps) steps.push_back(step_to_json(s));
    return Json{{"steps", steps}, {"target", cert.target.str()}};
}

Json witness_to_json(const StuckWitness& w) {
    return Json{{"a", w.a.str()}, {"b", w.b.str()}, {"reason", reason_tag(w.reason)}};
}

StuckWitness witness_from_json(const Json& j, const Ctx& ctx) {
    return StuckWitness{parse_cpoly(j.at("a").get<std::string>(), ctx),
                        parse_cpoly(j.at("b").get<std::string>(), ctx),
                        reason_from_tag(j.at("reason").get<std::string>())};
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    switch (v.kind) {
        case VerdictKind::Tame: j["verdict"] = "tame"; break;
        case VerdictKind::Wild: j["verdict"] = "wild"; break;
        case VerdictKind::Inconclusive: j["verdict"] = "inconclusive"; break;
    }
    if (!v.criterion.empty()) j["criterion"] = v.criterion;
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    if (v.kind == VerdictKind::Tame) {
        Json steps = Json::array();
        for (const auto& s : v.steps) steps.push_back(s.str());
        j["steps"] = steps;
        if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    }
    return j;
}

Json obstruction_to_json(const ObstructionReport& rep) {
    auto coeffs = [](const std::vector<Rational>& v) {
        Json a = Json::array();
        for (const auto& c : v) a.push_back(c.str());
        return a;
    };
    return Json{{"basis", rep.basis},
                {"right", Json{{"coefficients", coeffs(rep.right_coeffs)}, {"offset", rep.right_offset.str()}}},
                {"left", Json{{"coefficients", coeffs(rep.left_coeffs)}, {"offset", rep.left_offset.str()}}},
                {"verdict", rep.consistent ? "consistent" : "inconsistent"}};
}

namespace {

bool verify_certificate_json(const Json& j, const Ctx& ctx, std::string* why) {
    std::vector<ElemStep> steps;
    for (const auto& sj : j.at("steps")) steps.push_back(step_from_json(sj, ctx));
    CMatrix target = parse_cmatrix(j.at("target").get<std::string>(), ctx);
    if (!(recompose(steps, ctx) == target))
        return fail(why, "certificate does not recompose to its target");
    return true;
}

bool verify_tame_steps(const Json& report, const Ctx& actx, std::string* why) {
    std::vector<NcEndo> steps;
    for (const auto& sj : report.at("steps")) steps.push_back(parse_nc_endo(sj.get<std::string>(), actx));
    NcEndo total = compose_all(steps, actx);
    if (report.contains("input_endo")) {
        NcEndo in = parse_nc_endo(report.at("input_endo").get<std::string>(), actx);
        if (!(total == in)) return fail(why, "tame steps do not compose to the input endomorphism");
    } else if (report.contains("input_poly")) {
        NcPoly f = parse_ncpoly(report.at("input_poly").get<std::string>(), actx);
        if (!(total.image(actx->index_of("x")) == f))
            return fail(why, "tame steps do not send x to the input polynomial");
    }
    return true;
}

} // namespace

bool verify_report(const Json& report, std::string* why) {
    if (!report.contains("schema") || report.at("schema").get<int>() != kReportSchema)
        return fail(why, "unknown report schema");
    Ctx zz = z1z2_ctx();
    if (report.contains("vars")) {
        std::vector<std::string> names = report.at("vars").get<std::vector<std::string>>();
        zz = make_ctx(names);
    }

    if (report.contains("witness")) {
        StuckWitness w = witness_from_json(report.at("witness"), zz);
        if (!witness_stuck(w)) return fail(why, "witness pair is not actually stuck");
    }
    if (report.contains("certificate") &&
        !verify_certificate_json(report.at("certificate"), zz, why))
        return false;
    if (report.contains("steps") && report.contains("steps_ctx")) {
        Ctx actx = make_ctx(report.at("steps_ctx").get<std::vector<std::string>>());
        if (!verify_tame_steps(report, actx, why)) return false;
    }
    if (report.contains("na_steps") && report.contains("steps_ctx") &&
        report.contains("input_endo")) {
        Ctx actx = make_ctx(report.at("steps_ctx").get<std::vector<std::string>>());
        NaEndo total = NaEndo::identity(actx);
        for (const auto& sj : report.at("na_steps"))
            total = total.compose(parse_na_endo(sj.get<std::string>(), actx));
        NaEndo in = parse_na_endo(report.at("input_endo").get<std::string>(), actx);
        if (!(total == in)) return fail(why, "decomposition steps do not recompose to the input");
    }
    return true;
}

} // namespace freeaut
