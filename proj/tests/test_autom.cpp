#include <doctest.h>

#include "freeaut/autom.hpp"
#include "freeaut/parse.hpp"
#include "test_util.hpp"

using namespace freeaut;
using testutil::endo;
using testutil::nc;
using testutil::zz;

namespace {

NcEndo random_zero_tail_linear(std::mt19937& rng, int max_factors) {
    Ctx actx = xyz_ctx();
    Ctx zctx = z1z2_ctx();
    std::uniform_int_distribution<int> nf(1, max_factors);
    NcEndo acc = NcEndo::identity(actx);
    int n = nf(rng);
    for (int i = 0; i < n; ++i)
        acc = acc.compose(elementary_from_step(testutil::random_elem_step(rng, zctx, 2), actx));
    return acc;
}

CMatrix expected_anick_jz() {
    Ctx c = z1z2_ctx();
    CMatrix m(c, 2, 2);
    m.at(0, 0) = zz("1 + z1*z2");
    m.at(0, 1) = zz("z2^2");
    m.at(1, 0) = zz("-z1^2");
    m.at(1, 1) = zz("1 - z1*z2");
    return m;
}

} // namespace

TEST_SUITE_BEGIN("autom");

TEST_CASE("composition") {
    Ctx c = xyz_ctx();
    NcEndo omega = anick();
    CHECK(omega.compose(NcEndo::identity(c)) == omega);
    CHECK(NcEndo::identity(c).compose(omega) == omega);

    NcEndo inv = invert_z_linear(ZLinearAuto::from_endo(omega)).to_endo();
    CHECK(omega.compose(inv) == NcEndo::identity(c));
    CHECK(inv.compose(omega) == NcEndo::identity(c));
}

TEST_CASE("jz of the named families") {
    CHECK(jz(anick()) == expected_anick_jz());
    CHECK(jz(NcEndo::identity(xyz_ctx())) == CMatrix::identity(z1z2_ctx(), 2));
    CHECK(jz(anick()).det() == zz("1"));
}

TEST_CASE("jz of the shifted power family carries the geometric sum") {
    Ctx c = xyz_ctx();
    Ctx zc = z1z2_ctx();
    for (int m = 2; m <= 3; ++m) {
        NcEndo shifted = translation_endo(c, NcPoly::one(c), NcPoly::zero(c)).compose(anick_m(m));
        NcEndo lin = NcEndo::identity(c);
        for (int v : {0, 1}) {
            NcPoly img = shifted.image(v);
            std::map<int, NcPoly> zero_xy{
                {0, NcPoly::zero(c)}, {1, NcPoly::zero(c)}, {2, NcPoly::var(c, 2)}};
            img -= img.substitute(zero_xy);
            lin.images[static_cast<size_t>(v)] = img.homogeneous_component_in(1, {0, 1});
        }
        CPoly q(zc);
        for (int i = 0; i < m; ++i) q.add_term(Expo{{m - 1 - i, i}}, Rational(1));
        CMatrix expected(zc, 2, 2);
        expected.at(0, 0) = parse_cpoly("1", zc) + q * parse_cpoly("z1*z2", zc);
        expected.at(0, 1) = q * parse_cpoly("z2^2", zc);
        expected.at(1, 0) = -(q * parse_cpoly("z1^2", zc));
        expected.at(1, 1) = parse_cpoly("1", zc) - q * parse_cpoly("z1*z2", zc);
        CHECK(jz(lin) == expected);
        CHECK(jz(lin).det() == parse_cpoly("1", zc));
    }
}

TEST_CASE("jz is functorial on zero-tail linear pairs") {
    std::mt19937 rng(131);
    for (int i = 0; i < 200; ++i) {
        NcEndo a = random_zero_tail_linear(rng, 3);
        NcEndo b = random_zero_tail_linear(rng, 3);
        CHECK(jz(a.compose(b)) == jz(a) * jz(b));
    }
}

TEST_CASE("z-linear automorphism detection") {
    CHECK(is_z_linear_automorphism(anick()));
    CHECK(!is_z_linear_automorphism(endo("x ; x ; z")));
    std::mt19937 rng(139);
    for (int i = 0; i < 30; ++i)
        CHECK(is_z_linear_automorphism(testutil::random_z_linear_auto(rng, 5, 2)));
}

TEST_CASE("inversion") {
    Ctx c = xyz_ctx();
    NcEndo id = NcEndo::identity(c);
    CHECK(invert_z_linear(ZLinearAuto::from_endo(id)).to_endo() == id);

    ZLinearAuto winv = invert_z_linear(ZLinearAuto::from_endo(anick()));
    CMatrix expect(z1z2_ctx(), 2, 2);
    expect.at(0, 0) = zz("1 - z1*z2");
    expect.at(0, 1) = zz("-z2^2");
    expect.at(1, 0) = zz("z1^2");
    expect.at(1, 1) = zz("1 + z1*z2");
    CHECK(winv.a == expect);

    CHECK(invert_z_linear(ZLinearAuto::from_endo(endo("x + z^3 ; y ; z"))).to_endo() ==
          endo("x - z^3 ; y ; z"));

    std::mt19937 rng(149);
    for (int i = 0; i < 30; ++i) {
        NcEndo rho = testutil::random_z_linear_auto(rng, 4, 2);
        NcEndo inv = invert_z_linear(ZLinearAuto::from_endo(rho)).to_endo();
        CHECK(rho.compose(inv) == NcEndo::identity(c));
    }
}

TEST_CASE("elementary endomorphisms from steps") {
    Ctx c = xyz_ctx();
    Ctx zc = z1z2_ctx();
    CHECK(elementary_from_step(ElemStep::e12(CPoly::zero(zc)), c) == NcEndo::identity(c));
    CHECK(elementary_from_step(ElemStep::e21(zz("z1*z2")), c) == endo("x + z*y*z ; y ; z"));
    CHECK(elementary_from_step(ElemStep::diag(zc, Rational(2), Rational(3)), c) ==
          endo("2*x ; 3*y ; z"));

    std::mt19937 rng(151);
    for (int i = 0; i < 100; ++i) {
        ElemStep s = testutil::random_elem_step(rng, zc, 3);
        CHECK(jz(elementary_from_step(s, c)) == s.matrix(zc));
    }
}

TEST_CASE("z-tameness of linear automorphisms") {
    SUBCASE("anick is z-wild") {
        Verdict v = decide_z_tame_linear(anick());
        CHECK(v.wild());
        CHECK(v.criterion == kCritLinearZFixingGe2);
        CHECK(v.witness->a == zz("1 + z1*z2"));
        CHECK(v.witness->b == zz("-z1^2"));
    }
    SUBCASE("a two-step tame example") {
        Verdict v = decide_z_tame_linear(endo("x + z*y*z + z^2 ; y ; z"));
        CHECK(v.tame());
        CHECK(v.steps.size() == 2);
        CHECK(compose_all(v.steps, xyz_ctx()) == endo("x + z*y*z + z^2 ; y ; z"));
    }
    SUBCASE("identity") {
        Verdict v = decide_z_tame_linear(NcEndo::identity(xyz_ctx()));
        CHECK(v.tame());
        CHECK(v.steps.empty());
    }
}

TEST_CASE("coordinate decisions, linear case") {
    Verdict vx = decide_tame_coordinate_linear(nc("x + z*(x*z - z*y)"));
    CHECK(vx.wild());
    CHECK(vx.witness->a == zz("1 + z1*z2"));
    CHECK(vx.witness->b == zz("-z1^2"));

    Verdict vy = decide_tame_coordinate_linear(nc("y + (x*z - z*y)*z"));
    CHECK(vy.wild());
    CHECK(vy.witness->a == zz("z2^2"));
    CHECK(vy.witness->b == zz("1 - z1*z2"));

    Verdict vgen = decide_tame_coordinate_linear(nc("x"));
    CHECK(vgen.tame());
    CHECK(vgen.steps.empty());
}

TEST_CASE("tame coordinates come with working factorizations") {
    std::mt19937 rng(163);
    Ctx c = xyz_ctx();
    for (int i = 0; i < 50; ++i) {
        NcEndo rho = testutil::random_z_linear_auto(rng, 5, 2);
        NcPoly f = rho.image(0);
        Verdict v = decide_tame_coordinate_linear(f);
        REQUIRE(v.tame());
        CHECK(compose_all(v.steps, c).image(0) == f);
    }
}

TEST_CASE("wild coordinate decision via the linear part") {
    SUBCASE("the anick coordinate through the nonlinear entry point") {
        Verdict v = decide_wild_coordinate(nc("x + z*(x*z - z*y)"));
        CHECK(v.wild());
    }
    SUBCASE("plain generator is tame") {
        Verdict v = decide_wild_coordinate(nc("x"));
        CHECK(v.tame());
    }
    SUBCASE("degree-2 family member is inconclusive") {
        Verdict v = decide_wild_coordinate(nc("x + z*(x*z - z*y)^2"));
        CHECK(v.inconclusive());
    }
    SUBCASE("z-only terms violate the hypothesis") {
        CHECK_THROWS_AS(decide_wild_coordinate(nc("x + z^2")), Error);
    }
}

TEST_CASE("wildness of z-fixing automorphisms") {
    SUBCASE("identity is tame") {
        Verdict v = decide_wild_automorphism_zfixing(NcEndo::identity(xyz_ctx()));
        CHECK(v.tame());
    }
    SUBCASE("anick is wild") {
        Verdict v = decide_wild_automorphism_zfixing(anick());
        CHECK(v.wild());
    }
    SUBCASE("the degree-2 family needs the constant shift") {
        Verdict v = decide_wild_automorphism_zfixing(anick_m(2));
        CHECK(v.wild());
        CHECK(v.criterion == kCritAutomorphismLinearPart);
        // witness b = -q z1^2 with q = z1 + z2
        auto q = exact_divide_homogeneous(v.witness->b, zz("z1^2"));
        REQUIRE(q);
        CHECK(-*q == zz("z1 + z2"));
    }
    SUBCASE("sigma_h for h = t z") {
        NcPoly h = parse_ncpoly("t*z", tz_ctx());
        Verdict v = decide_wild_automorphism_zfixing(sigma_h(h));
        CHECK(v.wild());
    }
    SUBCASE("elementary but nonlinear stays inconclusive") {
        Verdict v = decide_wild_automorphism_zfixing(endo("x + [y,z]^2 ; y ; z"));
        CHECK(v.inconclusive());
    }
}

TEST_CASE("constructors") {
    CHECK(anick_m(1) == anick());
    CHECK_THROWS_AS(anick_m(0), Error);

    SUBCASE("sigma_h fixes xz - zy") {
        for (const char* hs : {"t", "t*z", "z*t + t^2"}) {
            NcEndo s = sigma_h(parse_ncpoly(hs, tz_ctx()));
            CHECK(s.apply(nc("x*z - z*y")) == nc("x*z - z*y"));
        }
        CHECK_THROWS_AS(sigma_h(parse_ncpoly("1 + t", tz_ctx())), Error);
    }

    SUBCASE("commutative specialization of anick is triangular") {
        NcPoly img = anick().image(0);
        CPoly comm = img.abelianize();
        CHECK(comm == parse_cpoly("x + z^2*x - z^2*y", make_ctx({"x", "y", "z"})));
    }

    SUBCASE("elementary constructor validates input") {
        Ctx c = xyz_ctx();
        CHECK(elementary_endo(c, 0, Rational(2), nc("y*z")) == endo("2*x + y*z ; y ; z"));
        CHECK_THROWS_AS(elementary_endo(c, 0, Rational(0), nc("y")), Error);
        CHECK_THROWS_AS(elementary_endo(c, 0, Rational(1), nc("x*y")), Error);
    }
}

TEST_CASE("an automorphism fixing y and z moves x affinely") {
    std::mt19937 rng(173);
    Ctx c = xyz_ctx();
    for (int i = 0; i < 30; ++i) {
        // products of elementary maps that keep y and z fixed
        NcEndo rho = NcEndo::identity(c);
        std::uniform_int_distribution<int> n(1, 4);
        std::uniform_int_distribution<int> alpha(1, 3);
        int k = n(rng);
        for (int s = 0; s < k; ++s) {
            NcPoly f = testutil::random_ncpoly(rng, c, 3, 3);
            NcPoly fyz(c);
            for (const auto& [w, coeff] : f.terms()) {
                bool ok = true;
                for (int l : w.letters)
                    if (l == 0) { ok = false; break; }
                if (ok) fyz.add_term(w, coeff);
            }
            rho = rho.compose(elementary_endo(c, 0, Rational(alpha(rng)), fyz));
        }
        auto dec = moved_coordinate_decomposition(rho, 0);
        REQUIRE(dec);
        CHECK(!dec->first.is_zero());
        CHECK(rho.image(0) == NcPoly::var(c, 0).scaled(dec->first) + dec->second);
    }
}

TEST_CASE("wild verdicts are stable under translation") {
    std::mt19937 rng(179);
    Ctx c = xyz_ctx();
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> deg(0, 3);
        std::uniform_int_distribution<int> coeff(-2, 2);
        NcPoly z = NcPoly::var(c, 2);
        NcPoly p = NcPoly::constant(c, Rational(coeff(rng)));
        NcPoly zp = NcPoly::one(c);
        int d = deg(rng);
        for (int j = 0; j < d; ++j) zp = zp * z;
        p = p + zp;
        NcEndo shifted = anick().compose(translation_endo(c, p, NcPoly::zero(c)));
        Verdict v = decide_wild_automorphism_zfixing(shifted);
        CHECK(v.wild());
    }
}

TEST_SUITE_END();
