#include "freeaut/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freeaut/parse.hpp"

namespace freeaut {

namespace {

constexpr const char* kUsage = R"(usage: freeaut <command> [options]

commands:
  coord decide <poly>              tame/wild decision for a candidate coordinate
  ge2 check <matrix>               GE2 membership of a 2x2 matrix, with certificate
  ge2 complete <a> <b>             complete a column to a GE2 matrix
  auto compose <endo> <endo>       composition (left acts after right)
  auto invert <endo>               inverse of a z-fixing xy-linear automorphism
  auto apply <endo> <poly>         image of a polynomial
  auto decide-zfix <f> <g>         wildness of the z-fixing endomorphism (f, g, z)
  examples anick|anick-m <m>|sigma-h <h>   named automorphism families
  deriv dl|metab|fox-l|fox-r <poly> <var>  derivative calculi
  metab jm|det|j2|evidence <endo>  metabelian Jacobian machinery
  metab ideal-test <poly>          commutator-ideal membership
  trace-test <endo> [--side l|r]   trace obstruction for augmentation-identity endos
  obstruction tau                  the degree-4 lifting obstruction report
  natree decompose <endo>          Z-tame decomposition in the nonassociative algebra
  natree member <g> -- <gens...>   homogeneous subalgebra membership
  verify <report-file>             re-check certificates/witnesses of a report

options:
  --json             print the JSON report on stdout
  --out FILE         also write the JSON report to FILE
  --vars a,b,c       override the variable context
  --side l|r         trace side (default r)
  --max-degree N     membership enumeration limit (default 8)

exit codes: 0 decided, 2 input error, 3 resource limit, 1 internal error
)";

struct Options {
    bool json = false;
    std::string out;
    std::vector<std::string> vars;
    std::string side = "r";
    int max_degree = kDefaultMembershipDegreeLimit;
    std::vector<std::string> pos;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Options parse_options(const std::vector<std::string>& args) {
    Options o;
    bool raw = false;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (raw || a.empty() || a[0] != '-' || a == "-") {
            o.pos.push_back(a);
            continue;
        }
        if (a == "--") {
            raw = true;
            o.pos.push_back(a);
            continue;
        }
        auto value = [&](const char* name) -> std::string {
            if (++i >= args.size()) raise(Errc::BadInput, std::string(name) + " needs a value");
            return args[i];
        };
        if (a == "--json") o.json = true;
        else if (a == "--out") o.out = value("--out");
        else if (a == "--vars") o.vars = split_csv(value("--vars"));
        else if (a == "--side") o.side = value("--side");
        else if (a == "--max-degree") o.max_degree = std::stoi(value("--max-degree"));
        else raise(Errc::BadInput, "unknown option: " + a);
    }
    return o;
}

const std::string& need(const Options& o, size_t i, const char* what) {
    if (i >= o.pos.size()) raise(Errc::BadInput, std::string("missing argument: ") + what);
    return o.pos[i];
}

Ctx assoc_ctx(const Options& o) { return o.vars.empty() ? xyz_ctx() : make_ctx(o.vars); }
Ctx comm_ctx(const Options& o) { return o.vars.empty() ? z1z2_ctx() : make_ctx(o.vars); }

Json base_report(const std::string& command) {
    return Json{{"schema", kReportSchema}, {"command", command}};
}

void attach_verdict(Json& rep, const Verdict& v, const Ctx& actx) {
    Json vj = verdict_to_json(v);
    rep.update(vj);
    if (v.kind == VerdictKind::Tame) rep["steps_ctx"] = actx->names;
    rep["vars"] = std::vector<std::string>{"z1", "z2"};
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream out;
    switch (v.kind) {
        case VerdictKind::Tame:
            out << "tame (" << v.criterion << "), " << v.steps.size() << " elementary step(s)";
            for (const auto& s : v.steps) out << "\n  " << s.str();
            break;
        case VerdictKind::Wild:
            out << "wild (" << v.criterion << "), stuck pair a = " << v.witness->a.str()
                << ", b = " << v.witness->b.str() << " [" << v.witness->describe() << "]";
            break;
        case VerdictKind::Inconclusive:
            out << "inconclusive: " << v.reason;
            break;
    }
    return out.str();
}

RunResult finish(const Options& o, Json rep, std::string text) {
    RunResult r;
    r.report = std::move(rep);
    r.text = std::move(text);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) raise(Errc::BadInput, "cannot write " + o.out);
        f << r.report.dump(2) << "\n";
    }
    return r;
}

RunResult cmd_coord(const Options& o) {
    if (need(o, 1, "subcommand") != "decide") raise(Errc::BadInput, "unknown coord subcommand");
    Ctx actx = assoc_ctx(o);
    NcPoly f = parse_ncpoly(need(o, 2, "polynomial"), actx);
    XYLinearForm probe;
    bool linear = true;
    try {
        probe = xy_linear_decompose(f);
    } catch (const Error& e) {
        if (e.code() != Errc::NotXYLinear) throw;
        linear = false;
    }
    Verdict v = linear ? decide_tame_coordinate_linear(f) : decide_wild_coordinate(f);
    Json rep = base_report("coord decide");
    rep["input_poly"] = f.str();
    attach_verdict(rep, v, actx);
    return finish(o, rep, verdict_text(v));
}

RunResult cmd_ge2(const Options& o) {
    const std::string& sub = need(o, 1, "subcommand");
    Ctx zz = comm_ctx(o);
    if (sub == "check") {
        CMatrix m = parse_cmatrix(need(o, 2, "matrix"), zz);
        Ge2Result res = ge2_membership(m);
        Json rep = base_report("ge2 check");
        rep["vars"] = zz->names;
        rep["input_matrix"] = m.str();
        std::string text;
        if (res.member) {
            rep["verdict"] = "member";
            rep["certificate"] = certificate_to_json(res.cert);
            text = "member of GE2, certificate with " + std::to_string(res.cert.steps.size()) + " step(s)";
        } else {
            rep["verdict"] = "not-member";
            rep["witness"] = witness_to_json(*res.witness);
            text = "not a member of GE2: stuck pair a = " + res.witness->a.str() +
                   ", b = " + res.witness->b.str();
        }
        return finish(o, rep, text);
    }
    if (sub == "complete") {
        CPoly a = parse_cpoly(need(o, 2, "a"), zz);
        CPoly b = parse_cpoly(need(o, 3, "b"), zz);
        CompleteResult res = complete_to_ge2(a, b);
        Json rep = base_report("ge2 complete");
        rep["vars"] = zz->names;
        rep["input_a"] = a.str();
        rep["input_b"] = b.str();
        std::string text;
        if (res.completed) {
            rep["verdict"] = "completed";
            rep["c"] = res.c.str();
            rep["d"] = res.d.str();
            rep["certificate"] = certificate_to_json(res.cert);
            text = "completed: c = " + res.c.str() + ", d = " + res.d.str();
        } else {
            rep["verdict"] = "not-completable";
            rep["witness"] = witness_to_json(*res.witness);
            text = "not completable: stuck pair a = " + res.witness->a.str() +
                   ", b = " + res.witness->b.str();
        }
        return finish(o, rep, text);
    }
    raise(Errc::BadInput, "unknown ge2 subcommand: " + sub);
}

RunResult cmd_auto(const Options& o) {
    const std::string& sub = need(o, 1, "subcommand");
    Ctx actx = assoc_ctx(o);
    if (sub == "compose") {
        NcEndo a = parse_nc_endo(need(o, 2, "endo"), actx);
        NcEndo b = parse_nc_endo(need(o, 3, "endo"), actx);
        NcEndo c = a.compose(b);
        Json rep = base_report("auto compose");
        rep["result"] = c.str();
        return finish(o, rep, c.str());
    }
    if (sub == "invert") {
        NcEndo a = parse_nc_endo(need(o, 2, "endo"), actx);
        NcEndo inv = invert_z_linear(ZLinearAuto::from_endo(a)).to_endo();
        Json rep = base_report("auto invert");
        rep["result"] = inv.str();
        return finish(o, rep, inv.str());
    }
    if (sub == "apply") {
        NcEndo a = parse_nc_endo(need(o, 2, "endo"), actx);
        NcPoly f = parse_ncpoly(need(o, 3, "poly"), actx);
        NcPoly img = a.apply(f);
        Json rep = base_report("auto apply");
        rep["result"] = img.str();
        return finish(o, rep, img.str());
    }
    if (sub == "decide-zfix") {
        NcPoly f = parse_ncpoly(need(o, 2, "f"), actx);
        NcPoly g = parse_ncpoly(need(o, 3, "g"), actx);
        NcEndo rho = NcEndo::identity(actx);
        rho.images[static_cast<size_t>(actx->index_of("x"))] = f;
        rho.images[static_cast<size_t>(actx->index_of("y"))] = g;
        Verdict v = decide_wild_automorphism_zfixing(rho);
        Json rep = base_report("auto decide-zfix");
        rep["input_endo"] = rho.str();
        attach_verdict(rep, v, actx);
        return finish(o, rep, verdict_text(v));
    }
    raise(Errc::BadInput, "unknown auto subcommand: " + sub);
}

RunResult cmd_examples(const Options& o) {
    const std::string& sub = need(o, 1, "family");
    NcEndo e;
    if (sub == "anick") {
        e = anick();
    } else if (sub == "anick-m") {
        e = anick_m(std::stoi(need(o, 2, "m")));
    } else if (sub == "sigma-h") {
        e = sigma_h(parse_ncpoly(need(o, 2, "h"), tz_ctx()));
    } else {
        raise(Errc::BadInput, "unknown example family: " + sub);
    }
    Json rep = base_report("examples " + sub);
    rep["result"] = e.str();
    return finish(o, rep, e.str());
}

RunResult cmd_deriv(const Options& o) {
    const std::string& sub = need(o, 1, "kind");
    Ctx actx = assoc_ctx(o);
    NcPoly f = parse_ncpoly(need(o, 2, "poly"), actx);
    int var = actx->index_of(need(o, 3, "var"));
    Json rep = base_report("deriv " + sub);
    std::string text;
    if (sub == "dl") {
        text = dicks_lewin(f, var).str();
    } else if (sub == "metab") {
        UVContext uvc = make_uv_context(actx);
        text = metab_derivative(f, var, uvc).str();
    } else if (sub == "fox-l") {
        text = fox_left(f, var).str();
    } else if (sub == "fox-r") {
        text = fox_right(f, var).str();
    } else {
        raise(Errc::BadInput, "unknown derivative kind: " + sub);
    }
    rep["result"] = text;
    return finish(o, rep, text);
}

RunResult cmd_metab(const Options& o) {
    const std::string& sub = need(o, 1, "subcommand");
    Ctx actx = assoc_ctx(o);
    Json rep = base_report("metab " + sub);
    if (sub == "ideal-test") {
        NcPoly f = parse_ncpoly(need(o, 2, "poly"), actx);
        bool member = commutator_ideal_member(f);
        rep["member"] = member;
        rep["residual"] = commutator_ideal_residual(f).str();
        return finish(o, rep, member ? "member of the commutator ideal"
                                     : "not in the commutator ideal");
    }
    NcEndo e = parse_nc_endo(need(o, 2, "endo"), actx);
    if (sub == "jm") {
        CMatrix m = jm(e);
        rep["result"] = m.str();
        return finish(o, rep, m.str());
    }
    if (sub == "det") {
        CPoly d = jm(e).det();
        rep["result"] = d.str();
        rep["automorphism"] = d.is_unit();
        return finish(o, rep, d.str());
    }
    if (sub == "j2") {
        CMatrix m = j2_bar(e);
        rep["result"] = m.str();
        rep["vars"] = std::vector<std::string>{"z1", "z2"};
        return finish(o, rep, m.str());
    }
    if (sub == "evidence") {
        Verdict v = umirbaev_wildness_evidence(e);
        rep["input_endo"] = e.str();
        attach_verdict(rep, v, actx);
        return finish(o, rep, verdict_text(v));
    }
    raise(Errc::BadInput, "unknown metab subcommand: " + sub);
}

RunResult cmd_trace(const Options& o) {
    Ctx actx = assoc_ctx(o);
    NcEndo e = parse_nc_endo(need(o, 1, "endo"), actx);
    FoxSide side;
    if (o.side == "r" || o.side == "right") side = FoxSide::Right;
    else if (o.side == "l" || o.side == "left") side = FoxSide::Left;
    else raise(Errc::BadInput, "--side must be l or r");
    TraceResult t = trace_test(e, side);
    Json rep = base_report("trace-test");
    std::string text;
    switch (t.verdict) {
        case TraceVerdict::Pass:
            rep["verdict"] = "pass";
            rep["k"] = t.k;
            text = "pass (k = " + std::to_string(t.k) + ")";
            break;
        case TraceVerdict::Fail:
            rep["verdict"] = "fail";
            rep["k"] = t.k;
            rep["residual"] = t.residual.rep.str();
            text = "fail: not an automorphism; residual class " + t.residual.rep.str();
            break;
        case TraceVerdict::NotApplicable:
            rep["verdict"] = "not-applicable";
            rep["note"] = t.note;
            text = "not applicable: " + t.note;
            break;
    }
    return finish(o, rep, text);
}

RunResult cmd_obstruction(const Options& o) {
    if (need(o, 1, "target") != "tau") raise(Errc::BadInput, "unknown obstruction target");
    ObstructionReport r = tau_lift_obstruction();
    Json rep = base_report("obstruction tau");
    rep.update(obstruction_to_json(r));
    std::ostringstream text;
    text << "right offset " << r.right_offset.str() << ", left offset " << r.left_offset.str()
         << ", " << (r.consistent ? "consistent" : "inconsistent");
    return finish(o, rep, text.str());
}

RunResult cmd_natree(const Options& o) {
    const std::string& sub = need(o, 1, "subcommand");
    Ctx actx = assoc_ctx(o);
    if (sub == "decompose") {
        NaEndo e = parse_na_endo(need(o, 2, "endo"), actx);
        std::vector<int> z_vars;
        for (int i = 0; i < actx->size(); ++i)
            if (e.fixes(i)) z_vars.push_back(i);
        NaDecomposition d = z_tame_decompose(e, z_vars, o.max_degree);
        Json rep = base_report("natree decompose");
        rep["input_endo"] = e.str();
        rep["steps_ctx"] = actx->names;
        Json fixed = Json::array();
        for (int z : z_vars) fixed.push_back(actx->names[static_cast<size_t>(z)]);
        rep["fixed"] = fixed;
        if (d.ok) {
            rep["verdict"] = "decomposed";
            Json steps = Json::array();
            for (const auto& s : d.steps) steps.push_back(s.str());
            rep["na_steps"] = steps;
            return finish(o, rep, "decomposed into " + std::to_string(d.steps.size()) +
                                      " elementary step(s)");
        }
        rep["verdict"] = "not-automorphism";
        rep["failure"] = d.failure;
        return finish(o, rep, "not an automorphism: " + d.failure);
    }
    if (sub == "member") {
        auto sep = std::find(o.pos.begin(), o.pos.end(), std::string("--"));
        if (sep == o.pos.end() || sep + 1 == o.pos.end())
            raise(Errc::BadInput, "usage: natree member <g> -- <gens...>");
        NaPoly g = parse_napoly(need(o, 2, "g"), actx);
        std::vector<NaPoly> gens;
        std::vector<std::string> gen_names;
        for (auto it = sep + 1; it != o.pos.end(); ++it) {
            gens.push_back(parse_napoly(*it, actx));
            gen_names.push_back("g" + std::to_string(gen_names.size() + 1));
        }
        auto expr = subalgebra_express_homogeneous(g, gens, o.max_degree);
        Json rep = base_report("natree member");
        if (expr) {
            rep["verdict"] = "member";
            rep["expression"] = expr->str(gen_names);
            return finish(o, rep, "member: " + expr->str(gen_names));
        }
        rep["verdict"] = "not-member";
        return finish(o, rep, "not a member");
    }
    raise(Errc::BadInput, "unknown natree subcommand: " + sub);
}

RunResult cmd_verify(const Options& o) {
    std::ifstream f(need(o, 1, "report-file"));
    if (!f) raise(Errc::BadInput, "cannot read " + o.pos[1]);
    Json report;
    try {
        f >> report;
    } catch (const std::exception& e) {
        raise(Errc::Parse, std::string("bad report JSON: ") + e.what());
    }
    std::string why;
    bool ok = verify_report(report, &why);
    Json rep = base_report("verify");
    rep["valid"] = ok;
    if (!ok) rep["why"] = why;
    return finish(o, rep, ok ? "valid" : "invalid: " + why);
}

} // namespace

RunResult run_command(const std::vector<std::string>& args) {
    auto started = std::chrono::steady_clock::now();
    RunResult r;
    try {
        Options o = parse_options(args);
        if (o.pos.empty() || o.pos[0] == "help" || o.pos[0] == "--help") {
            r.text = kUsage;
            r.report = Json{{"schema", kReportSchema}, {"command", "help"}};
            return r;
        }
        const std::string& cmd = o.pos[0];
        if (cmd == "coord") r = cmd_coord(o);
        else if (cmd == "ge2") r = cmd_ge2(o);
        else if (cmd == "auto") r = cmd_auto(o);
        else if (cmd == "examples") r = cmd_examples(o);
        else if (cmd == "deriv") r = cmd_deriv(o);
        else if (cmd == "metab") r = cmd_metab(o);
        else if (cmd == "trace-test") r = cmd_trace(o);
        else if (cmd == "obstruction") r = cmd_obstruction(o);
        else if (cmd == "natree") r = cmd_natree(o);
        else if (cmd == "verify") r = cmd_verify(o);
        else raise(Errc::BadInput, "unknown command: " + cmd);
    } catch (const Error& e) {
        r.exit_code = e.code() == Errc::ResourceLimit ? 3
                      : (e.code() == Errc::Internal || e.code() == Errc::ShapeViolation) ? 1
                                                                                         : 2;
        r.text = std::string("error: ") + e.what();
        r.report = Json{{"schema", kReportSchema}, {"error", e.what()}};
        return r;
    } catch (const std::exception& e) {
        r.exit_code = 1;
        r.text = std::string("internal error: ") + e.what();
        r.report = Json{{"schema", kReportSchema}, {"error", e.what()}};
        return r;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    if (r.report.is_object()) r.report["elapsed_ms"] = elapsed.count();
    return r;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = false;
    for (const auto& a : args)
        if (a == "--json") json = true;
    RunResult r = run_command(args);
    if (json) {
        std::cout << r.report.dump(2) << "\n";
    } else if (!r.text.empty()) {
        std::cout << r.text << "\n";
    }
    return r.exit_code;
}

} // namespace freeaut
