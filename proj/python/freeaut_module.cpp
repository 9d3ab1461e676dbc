#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeaut/cli.hpp"
#include "freeaut/metab.hpp"
#include "freeaut/natree.hpp"
#include "freeaut/parse.hpp"

namespace py = pybind11;
using namespace freeaut;

namespace {

py::object to_py(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

Ctx ctx_from(const std::vector<std::string>& vars) {
    return vars.empty() ? xyz_ctx() : make_ctx(vars);
}

py::object verdict_dict(const Verdict& v, const Ctx& actx) {
    Json j = verdict_to_json(v);
    if (v.kind == VerdictKind::Tame) j["steps_ctx"] = actx->names;
    return to_py(j);
}

void register_errors(py::module_& m) {
    static py::exception<Error> exc(m, "FreeautError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });
}

} // namespace

PYBIND11_MODULE(freeaut, m) {
    m.doc() = "Exact decision procedures for tame and wild automorphisms of free algebras";

    register_errors(m);

    m.def(
        "simplify",
        [](const std::string& text, const std::vector<std::string>& vars) {
            Ctx c = ctx_from(vars);
            return parse_ncpoly(text, c).str();
        },
        py::arg("poly"), py::arg("vars") = std::vector<std::string>{},
        "Canonical form of a noncommutative polynomial");

    m.def(
        "decide_coordinate",
        [](const std::string& poly) {
            RunResult r = run_command({"coord", "decide", poly});
            if (r.exit_code != 0) throw Error(Errc::BadInput, r.text);
            return to_py(r.report);
        },
        py::arg("poly"), "Tame/wild decision for a candidate coordinate of the rank-3 algebra");

    m.def(
        "decide_zfixing",
        [](const std::string& f, const std::string& g) {
            Ctx c = xyz_ctx();
            NcEndo rho = NcEndo::identity(c);
            rho.images[0] = parse_ncpoly(f, c);
            rho.images[1] = parse_ncpoly(g, c);
            return verdict_dict(decide_wild_automorphism_zfixing(rho), c);
        },
        py::arg("f"), py::arg("g"), "Wildness of the z-fixing endomorphism (f, g, z)");

    m.def(
        "ge2_check",
        [](const std::string& matrix) {
            RunResult r = run_command({"ge2", "check", matrix});
            if (r.exit_code != 0) throw Error(Errc::BadInput, r.text);
            return to_py(r.report);
        },
        py::arg("matrix"), "GE2 membership of a 2x2 matrix literal over (z1, z2)");

    m.def(
        "ge2_complete",
        [](const std::string& a, const std::string& b) {
            RunResult r = run_command({"ge2", "complete", a, b});
            if (r.exit_code != 0) throw Error(Errc::BadInput, r.text);
            return to_py(r.report);
        },
        py::arg("a"), py::arg("b"), "Column completion to a GE2 matrix");

    m.def(
        "compose",
        [](const std::string& a, const std::string& b) {
            Ctx c = xyz_ctx();
            return parse_nc_endo(a, c).compose(parse_nc_endo(b, c)).str();
        },
        py::arg("outer"), py::arg("inner"));

    m.def(
        "apply",
        [](const std::string& e, const std::string& f) {
            Ctx c = xyz_ctx();
            return parse_nc_endo(e, c).apply(parse_ncpoly(f, c)).str();
        },
        py::arg("endo"), py::arg("poly"));

    m.def(
        "invert_linear",
        [](const std::string& e) {
            Ctx c = xyz_ctx();
            return invert_z_linear(ZLinearAuto::from_endo(parse_nc_endo(e, c))).to_endo().str();
        },
        py::arg("endo"), "Inverse of a z-fixing xy-linear automorphism");

    m.def("anick", [] { return anick().str(); });
    m.def(
        "anick_power", [](int p) { return anick_m(p).str(); }, py::arg("m"));
    m.def(
        "sigma",
        [](const std::string& h) { return sigma_h(parse_ncpoly(h, tz_ctx())).str(); },
        py::arg("h"), "The family fixing xz - zy, from h(t, z) with h(0,0) = 0");

    m.def(
        "jz_matrix",
        [](const std::string& e) { return jz(parse_nc_endo(e, xyz_ctx())).str(); },
        py::arg("endo"));

    m.def(
        "jm_matrix",
        [](const std::string& e) { return jm(parse_nc_endo(e, xyz_ctx())).str(); },
        py::arg("endo"));

    m.def(
        "metab_evidence",
        [](const std::string& e) {
            return verdict_dict(umirbaev_wildness_evidence(parse_nc_endo(e, xyz_ctx())), xyz_ctx());
        },
        py::arg("endo"));

    m.def(
        "ideal_test",
        [](const std::string& poly) {
            return commutator_ideal_member(parse_ncpoly(poly, xyz_ctx()));
        },
        py::arg("poly"), "Commutator-ideal membership in the metabelian quotient");

    m.def(
        "trace_test",
        [](const std::string& e, const std::string& side) {
            RunResult r = run_command({"trace-test", e, "--side", side});
            if (r.exit_code != 0) throw Error(Errc::BadInput, r.text);
            return to_py(r.report);
        },
        py::arg("endo"), py::arg("side") = "r");

    m.def("obstruction_tau", [] { return to_py(obstruction_to_json(tau_lift_obstruction())); });

    m.def(
        "fox",
        [](const std::string& poly, const std::string& var, const std::string& side) {
            Ctx c = xyz_ctx();
            FoxSide s = side == "l" ? FoxSide::Left : FoxSide::Right;
            return fox(s, parse_ncpoly(poly, c), c->index_of(var)).str();
        },
        py::arg("poly"), py::arg("var"), py::arg("side") = "r");

    m.def(
        "dicks_lewin",
        [](const std::string& poly, const std::string& var) {
            Ctx c = xyz_ctx();
            return dicks_lewin(parse_ncpoly(poly, c), c->index_of(var)).str();
        },
        py::arg("poly"), py::arg("var"));

    m.def(
        "metab_derivative",
        [](const std::string& poly, const std::string& var) {
            Ctx c = xyz_ctx();
            return metab_derivative(parse_ncpoly(poly, c), c->index_of(var), make_uv_context(c)).str();
        },
        py::arg("poly"), py::arg("var"));

    m.def(
        "natree_decompose",
        [](const std::string& e, int max_degree) {
            RunResult r = run_command({"natree", "decompose", e, "--max-degree",
                                       std::to_string(max_degree)});
            if (r.exit_code == 3) throw Error(Errc::ResourceLimit, r.text);
            if (r.exit_code != 0) throw Error(Errc::BadInput, r.text);
            return to_py(r.report);
        },
        py::arg("endo"), py::arg("max_degree") = kDefaultMembershipDegreeLimit);

    m.def(
        "natree_member",
        [](const std::string& g, const std::vector<std::string>& gens, int max_degree) -> py::object {
            Ctx c = xyz_ctx();
            std::vector<NaPoly> gen_polys;
            std::vector<std::string> names;
            for (const auto& s : gens) {
                gen_polys.push_back(parse_napoly(s, c));
                names.push_back("g" + std::to_string(names.size() + 1));
            }
            auto e = subalgebra_express_homogeneous(parse_napoly(g, c), gen_polys, max_degree);
            if (!e) return py::none();
            return py::str(e->str(names));
        },
        py::arg("g"), py::arg("gens"), py::arg("max_degree") = kDefaultMembershipDegreeLimit);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            RunResult r = run_command(args);
            return py::make_tuple(r.exit_code, to_py(r.report), r.text);
        },
        py::arg("args"), "Raw CLI entry point: returns (exit_code, report, text)");

    m.def(
        "verify_report",
        [](const std::string& report_json) {
            std::string why;
            bool ok = verify_report(Json::parse(report_json), &why);
            return py::make_tuple(ok, why);
        },
        py::arg("report_json"));
}
