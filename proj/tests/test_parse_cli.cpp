#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "freeaut/cli.hpp"
#include "freeaut/parse.hpp"
#include "test_util.hpp"

using namespace freeaut;
using testutil::nc;

TEST_SUITE_BEGIN("parse_cli");

TEST_CASE("grammar essentials") {
    Ctx c = xyz_ctx();
    CHECK(nc("x + z*(x*z - z*y)") == anick().image(0));
    CHECK(parse_ncpoly("0", c).is_zero());
    CHECK(nc("[x,y]^2") == nc("[x,y]") * nc("[x,y]"));
    CHECK(nc("3/2*x - 1/2*x") == nc("x"));
    CHECK(nc("-x + 2*x") == nc("x"));
    CHECK(nc("x^0") == NcPoly::one(c));

    CHECK_THROWS_AS(parse_ncpoly("x + ", c), Error);
    CHECK_THROWS_AS(parse_ncpoly("q", c), Error);
    CHECK_THROWS_AS(parse_ncpoly("x/2", c), Error);
    CHECK_THROWS_AS(parse_ncpoly("x y", c), Error);

    // commutative mode
    Ctx zc = z1z2_ctx();
    CHECK(parse_cpoly("z1*z2 - z2*z1 + z1", zc) == parse_cpoly("z1", zc));

    // nonassociative mode needs explicit bracketing
    CHECK_THROWS_AS(parse_napoly("x*y*z", c), Error);
    CHECK_THROWS_AS(parse_napoly("x^3", c), Error);
    CHECK(parse_napoly("[x,y]", c) == parse_napoly("x*y - y*x", c));
}

TEST_CASE("parser position reporting") {
    try {
        parse_ncpoly("x + $", xyz_ctx());
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Parse);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("printer-parser roundtrip across modes") {
    std::mt19937 rng(233);
    Ctx c = xyz_ctx();
    Ctx zc = z1z2_ctx();
    for (int i = 0; i < 200; ++i) {
        NcPoly f = testutil::random_ncpoly(rng, c, 5, 6);
        CHECK(parse_ncpoly(f.str(), c) == f);
        CPoly p = testutil::random_cpoly(rng, zc, 4, 5);
        CHECK(parse_cpoly(p.str(), zc) == p);
    }
    for (const char* s : {"x*(y*z) - (x*y)*z", "2*((x*y)*(y*z)) + x", "-x + 1/3*(z*z)"}) {
        NaPoly f = parse_napoly(s, c);
        CHECK(parse_napoly(f.str(), c) == f);
    }
}

TEST_CASE("cli decisions and reports") {
    SUBCASE("coord decide on the wild coordinate") {
        RunResult r = run_command({"coord", "decide", "x + z*(x*z - z*y)"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("verdict") == "wild");
        CHECK(r.report.at("witness").at("a") == "z1*z2 + 1");
        CHECK(r.report.at("witness").at("b") == "-z1^2");
    }
    SUBCASE("ge2 check identity") {
        RunResult r = run_command({"ge2", "check", "[[1,0],[0,1]]"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("verdict") == "member");
        CHECK(r.report.at("certificate").at("steps").empty());
    }
    SUBCASE("ge2 complete") {
        RunResult r = run_command({"ge2", "complete", "z1^2 + 1", "z1"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("verdict") == "completed");
    }
    SUBCASE("examples and auto plumbing") {
        RunResult ex = run_command({"examples", "anick-m", "2"});
        CHECK(ex.exit_code == 0);
        RunResult ap = run_command({"auto", "apply", "y ; x ; z", "[x,y]"});
        CHECK(ap.exit_code == 0);
        CHECK(ap.report.at("result") == (-nc("[x,y]")).str());
        RunResult co = run_command({"auto", "compose", "x + z^2 ; y ; z", "x - z^2 ; y ; z"});
        CHECK(co.exit_code == 0);
        CHECK(co.report.at("result") == "x ; y ; z");
        RunResult dz = run_command({"auto", "decide-zfix", "x + z*(x*z - z*y)^2", "y + (x*z - z*y)^2*z"});
        CHECK(dz.exit_code == 0);
        CHECK(dz.report.at("verdict") == "wild");
    }
    SUBCASE("deriv subcommands") {
        RunResult r = run_command({"deriv", "fox-r", "x^2*[y,z]", "x"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("result") == nc("x*[y,z]").str());
        RunResult dl = run_command({"deriv", "dl", "x*y*x", "x"});
        CHECK(dl.exit_code == 0);
        RunResult mb = run_command({"deriv", "metab", "x + x^2*[y,z]", "y"});
        CHECK(mb.exit_code == 0);
    }
    SUBCASE("metab subcommands") {
        RunResult r = run_command({"metab", "jm", "x + x^2*[y,z] ; y ; z"});
        CHECK(r.exit_code == 0);
        RunResult ev = run_command({"metab", "evidence", "x + [y,z] ; y ; z"});
        CHECK(ev.exit_code == 0);
        CHECK(ev.report.at("verdict") == "inconclusive");
        RunResult bad = run_command({"metab", "evidence", "x + z*(x*z - z*y) ; y ; z"});
        CHECK(bad.exit_code == 2);
        RunResult it = run_command({"metab", "ideal-test", "[x,y]"});
        CHECK(it.exit_code == 0);
        CHECK(it.report.at("member") == true);
    }
    SUBCASE("trace and obstruction") {
        RunResult r = run_command({"trace-test", "x + x^2*[y,z] ; y ; z"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("verdict") == "fail");
        RunResult l = run_command({"trace-test", "x + x^2*[y,z] ; y ; z", "--side", "l"});
        CHECK(l.exit_code == 0);
        CHECK(l.report.at("verdict") == "pass");
        RunResult ob = run_command({"obstruction", "tau"});
        CHECK(ob.exit_code == 0);
        CHECK(ob.report.at("verdict") == "inconsistent");
    }
    SUBCASE("natree subcommands") {
        RunResult r = run_command({"natree", "decompose", "x + z*(y*z) ; y ; z"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("verdict") == "decomposed");
        RunResult m = run_command({"natree", "member", "y*(y*z)", "--", "y", "z"});
        CHECK(m.exit_code == 0);
        CHECK(m.report.at("verdict") == "member");
        RunResult n = run_command({"natree", "member", "x*x", "--", "y", "z"});
        CHECK(n.exit_code == 0);
        CHECK(n.report.at("verdict") == "not-member");
    }
    SUBCASE("input errors exit with 2") {
        CHECK(run_command({"coord", "decide", "x +"}).exit_code == 2);
        CHECK(run_command({"coord", "decide", "q"}).exit_code == 2);
        CHECK(run_command({"nonsense"}).exit_code == 2);
    }
    SUBCASE("resource limits exit with 3") {
        RunResult r = run_command({"natree", "member", "(((((((x*x)*x)*x)*x)*x)*x)*x)*(x*x)",
                                   "--", "x"});
        CHECK(r.exit_code == 3);
    }
}

TEST_CASE("reports verify and mutations are rejected") {
    std::string path = "freeaut_test_report.json";
    SUBCASE("tame coordinate report roundtrip") {
        RunResult r = run_command({"coord", "decide", "x + z*y*z + z^2", "--out", path});
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.report.at("verdict") == "tame");
        RunResult v = run_command({"verify", path});
        CHECK(v.exit_code == 0);
        CHECK(v.report.at("valid") == true);
        std::remove(path.c_str());
    }
    SUBCASE("ge2 membership certificate fuzz") {
        // E12(z1) E21(z2) E12(z2^2)
        RunResult r = run_command({"ge2", "check", "[[1 + z1*z2, z1 + z2^2 + z1*z2^3],[z2, 1 + z2^3]]",
                                   "--out", path});
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.report.at("verdict") == "member");
        RunResult v = run_command({"verify", path});
        CHECK(v.report.at("valid") == true);

        std::mt19937 rng(239);
        Json base = r.report;
        int rejected = 0;
        for (int i = 0; i < 100; ++i) {
            Json mutated = base;
            auto& steps = mutated["certificate"]["steps"];
            if (steps.empty()) break;
            std::uniform_int_distribution<int> pick(0, static_cast<int>(steps.size()) - 1);
            Json& step = steps[static_cast<size_t>(pick(rng))];
            if (step.at("kind") == "diag") {
                step["alpha"] = "7";
            } else {
                std::string q = step.at("q").get<std::string>();
                step["q"] = q + " + 1";
            }
            std::ofstream out(path);
            out << mutated.dump();
            out.close();
            RunResult mv = run_command({"verify", path});
            if (mv.report.at("valid") == false) ++rejected;
        }
        CHECK(rejected == 100);
        std::remove(path.c_str());
    }
}

TEST_SUITE_END();
