#include <doctest.h>

#include "freeaut/deriv.hpp"
#include "freeaut/metab.hpp"
#include "freeaut/parse.hpp"
#include "test_util.hpp"

using namespace freeaut;
using testutil::endo;
using testutil::nc;

namespace {

CPoly uv(const std::string& s) {
    return parse_cpoly(s, make_uv_context(xyz_ctx()).uv);
}

} // namespace

TEST_SUITE_BEGIN("deriv");

TEST_CASE("dicks-lewin on words") {
    Ctx c = xyz_ctx();
    TensorPoly d = dicks_lewin(nc("x*y*x"), 0);
    TensorPoly expected(c);
    expected.add_term(Word{}, Word{{1, 0}}, Rational(1));      // 1 (x) yx
    expected.add_term(Word{{0, 1}}, Word{}, Rational(1));      // xy (x) 1
    CHECK(d == expected);

    CHECK(dicks_lewin(nc("y"), 0).is_zero());
    CHECK(dicks_lewin(NcPoly::one(c), 0).is_zero());
    CHECK(dicks_lewin(nc("x"), 0) == TensorPoly::unit(c));

    TensorPoly da = dicks_lewin(nc("x + z*(x*z - z*y)"), 0);
    TensorPoly ea(c);
    ea.add_term(Word{}, Word{}, Rational(1));
    ea.add_term(Word{{2}}, Word{{2}}, Rational(1));            // z (x) z
    CHECK(da == ea);
    CHECK(tensor_to_uv(da, make_uv_context(c)) == uv("1 + z1*z2"));
}

TEST_CASE("tensor specialization") {
    Ctx c = xyz_ctx();
    UVContext uvc = make_uv_context(c);
    CHECK(tensor_to_uv(TensorPoly::unit(c), uvc) == uv("1"));
    TensorPoly t(c);
    t.add_term(Word{{2}}, Word{{2}}, Rational(1));
    CHECK(tensor_to_uv(t, uvc) == uv("z1*z2"));
    TensorPoly s(c);
    s.add_term(Word{{0, 1}}, Word{{2}}, Rational(1));
    CHECK(tensor_to_uv(s, uvc) == uv("x1*y1*z2"));
}

TEST_CASE("jacobian of dicks-lewin type") {
    Ctx c = xyz_ctx();
    auto id = jacobian_dl(NcEndo::identity(c));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id[i][j] == (i == j ? TensorPoly::unit(c) : TensorPoly::zero(c)));

    // one moved coordinate: first column carries alpha and the derivatives of f
    NcEndo tau = endo("2*x + y*z ; y ; z");
    auto m = jacobian_dl(tau);
    CHECK(m[0][0] == TensorPoly::unit(c).scaled(Rational(2)));
    CHECK(m[1][0] == dicks_lewin(nc("y*z"), 1));
    CHECK(m[2][0] == dicks_lewin(nc("y*z"), 2));
    CHECK(m[0][1].is_zero());
    CHECK(m[1][1] == TensorPoly::unit(c));
}

TEST_CASE("metabelian derivative word formula") {
    Ctx c = xyz_ctx();
    UVContext uvc = make_uv_context(c);
    CHECK(metab_derivative(nc("x*y"), 0, uvc) == uv("y2"));
    CHECK(metab_derivative(nc("[x,y]"), 0, uvc) == uv("y2 - y1"));
    CHECK(metab_derivative(nc("x + x^2*[y,z]"), 1, uvc) == uv("x1^2*z2 - x1^2*z1"));
}

TEST_CASE("metabelian derivative factors through dicks-lewin") {
    Ctx c = xyz_ctx();
    UVContext uvc = make_uv_context(c);
    std::mt19937 rng(61);
    for (int i = 0; i < 300; ++i) {
        NcPoly f = testutil::random_ncpoly(rng, c, 5, 6);
        int var = static_cast<int>(i % 3);
        CHECK(metab_derivative(f, var, uvc) == tensor_to_uv(dicks_lewin(f, var), uvc));
    }
}

TEST_CASE("fox derivatives") {
    Ctx c = xyz_ctx();
    CHECK(fox_right(nc("x^2*[y,z]"), 0) == nc("x*[y,z]"));
    CHECK(fox_left(nc("x^2*[y,z]"), 0).is_zero());
    CHECK(fox_right(nc("y"), 0).is_zero());
    CHECK(fox_left(nc("x^2*[y,z]"), 1) == -nc("x^2*z"));
}

TEST_CASE("fox reconstitution identity") {
    Ctx c = xyz_ctx();
    std::mt19937 rng(71);
    for (int i = 0; i < 300; ++i) {
        NcPoly f = testutil::random_ncpoly(rng, c, 5, 6);
        NcPoly right = NcPoly::constant(c, f.constant_term());
        NcPoly left = NcPoly::constant(c, f.constant_term());
        for (int v = 0; v < 3; ++v) {
            right += NcPoly::var(c, v) * fox_right(f, v);
            left += fox_left(f, v) * NcPoly::var(c, v);
        }
        CHECK(right == f);
        CHECK(left == f);
    }
}

TEST_CASE("fox jacobians") {
    Ctx c = xyz_ctx();
    auto id = jacobian_fox(NcEndo::identity(c), FoxSide::Right);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id[i][j] == (i == j ? NcPoly::one(c) : NcPoly::zero(c)));

    auto jr = jacobian_fox(endo("x + x^2*[y,z] ; y ; z"), FoxSide::Right);
    CHECK(jr[0][0] == nc("1 + x*[y,z]"));

    auto je = jacobian_fox(endo("x + [y,z] ; y ; z"), FoxSide::Right);
    CHECK(je[0][0] == nc("1"));
}

TEST_CASE("leibniz identity for dicks-lewin") {
    Ctx c = xyz_ctx();
    std::mt19937 rng(83);
    for (int i = 0; i < 200; ++i) {
        NcPoly f = testutil::random_ncpoly(rng, c, 3, 4);
        NcPoly g = testutil::random_ncpoly(rng, c, 3, 4);
        int var = static_cast<int>(i % 3);
        TensorPoly lhs = dicks_lewin(f * g, var);
        TensorPoly rhs = dicks_lewin(f, var).act_suffix(g) + dicks_lewin(g, var).act_prefix(f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("commutator-ideal kernel identity") {
    Ctx c = xyz_ctx();
    std::mt19937 rng(97);
    int members = 0, nonmembers = 0;
    while (members < 100 || nonmembers < 100) {
        NcPoly f = testutil::random_ncpoly(rng, c, 3, 3);
        NcPoly g = testutil::random_ncpoly(rng, c, 3, 3);
        NcPoly u = testutil::random_ncpoly(rng, c, 2, 2);
        NcPoly member = u * commutator(f, g);
        if (members < 100) {
            CHECK(commutator_ideal_residual(member).is_zero());
            ++members;
        }
        NcPoly probe = member + testutil::random_ncpoly(rng, c, 3, 2, false);
        if (nonmembers < 100 && !probe.abelianize().is_zero() &&
            probe.constant_term().is_zero()) {
            CHECK(!commutator_ideal_residual(probe).is_zero());
            ++nonmembers;
        }
    }
}

TEST_SUITE_END();
