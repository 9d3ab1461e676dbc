#include <doctest.h>

#include "freeaut/natree.hpp"
#include "freeaut/parse.hpp"
#include "test_util.hpp"

using namespace freeaut;

namespace {

NaPoly na(const std::string& s) { return parse_napoly(s, xyz_ctx()); }
NaEndo nendo(const std::string& s) { return parse_na_endo(s, xyz_ctx()); }

// Random Z-elementary automorphism of K{x, y, z} fixing z.
NaEndo random_z_elementary(std::mt19937& rng, const Ctx& ctx, const std::vector<int>& x_vars,
                           int fdeg) {
    std::uniform_int_distribution<int> slot_pick(0, static_cast<int>(x_vars.size()) - 1);
    std::uniform_int_distribution<int> alpha_pick(1, 2);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> nterms(0, 2);
    int slot = x_vars[static_cast<size_t>(slot_pick(rng))];

    std::vector<int> others;
    for (int i = 0; i < ctx->size(); ++i)
        if (i != slot) others.push_back(i);

    // random nonassociative polynomial in the other variables
    NaPoly f(ctx);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        std::uniform_int_distribution<int> deg_pick(1, fdeg);
        int d = deg_pick(rng);
        auto tree = [&](auto&& self, int deg) -> NaWord {
            if (deg == 1) {
                std::uniform_int_distribution<int> v(0, static_cast<int>(others.size()) - 1);
                return NaWord::leaf(others[static_cast<size_t>(v(rng))]);
            }
            std::uniform_int_distribution<int> split(1, deg - 1);
            int l = split(rng);
            return NaWord::prod(self(self, l), self(self, deg - l));
        };
        int c = coeff(rng);
        if (c == 0) c = 1;
        f.add_term(tree(tree, d), Rational(c));
    }
    NaEndo e = NaEndo::identity(ctx);
    e.images[static_cast<size_t>(slot)] =
        NaPoly::var(ctx, slot).scaled(Rational(alpha_pick(rng))) + f;
    return e;
}

} // namespace

TEST_SUITE_BEGIN("natree");

TEST_CASE("words distinguish bracketings") {
    Ctx c = xyz_ctx();
    NaWord x = NaWord::leaf(0);
    NaWord l = NaWord::prod(NaWord::prod(x, x), x);
    NaWord r = NaWord::prod(x, NaWord::prod(x, x));
    CHECK(!(l == r));
    CHECK(l.degree() == 3);
    CHECK(na("(x*x)*x") != na("x*(x*x)"));
    CHECK(na("(x*x)*x") == NaPoly::var(c, 0) * NaPoly::var(c, 0) * NaPoly::var(c, 0));
}

TEST_CASE("leading forms") {
    CHECK(leading_form(na("x + y*(y*z)")) == na("y*(y*z)"));
    CHECK(leading_form(na("z")) == na("z"));
    CHECK(leading_form(na("x*(y*z) + (x*y)*z")) == na("x*(y*z) + (x*y)*z"));
    CHECK_THROWS_AS(leading_form(NaPoly::zero(xyz_ctx())), Error);
}

TEST_CASE("flatten is the associative projection") {
    Ctx c = xyz_ctx();
    CHECK(na("x*(y*z)").flatten(c) == parse_ncpoly("x*y*z", c));
    CHECK(na("(x*y)*z").flatten(c) == parse_ncpoly("x*y*z", c));

    std::mt19937 rng(211);
    std::vector<int> xv{0, 1};
    for (int i = 0; i < 200; ++i) {
        NaEndo a = random_z_elementary(rng, c, xv, 3);
        NaEndo b = random_z_elementary(rng, c, xv, 3);
        NcEndo fa = na_endo_to_assoc(a, c), fb = na_endo_to_assoc(b, c);
        CHECK(na_endo_to_assoc(a.compose(b), c) == fa.compose(fb));
    }
}

TEST_CASE("subalgebra membership") {
    Ctx c = xyz_ctx();
    NaPoly y = NaPoly::var(c, 1), z = NaPoly::var(c, 2);
    SUBCASE("direct product") {
        auto e = subalgebra_express_homogeneous(na("y*(y*z)"), {y, z});
        REQUIRE(e);
        CHECK(e->evaluate({y, z}, c) == na("y*(y*z)"));
    }
    SUBCASE("no expression exists") {
        CHECK(!subalgebra_express_homogeneous(na("x*x"), {y, z}));
    }
    SUBCASE("sum of bracketings") {
        NaPoly g = na("(y*z)*y + y*(z*y)");
        auto e = subalgebra_express_homogeneous(g, {y, z});
        REQUIRE(e);
        CHECK(e->evaluate({y, z}, c) == g);
    }
    SUBCASE("composite generators") {
        NaPoly g1 = na("y*z + z*z");
        auto e = subalgebra_express_homogeneous(na("(y*z)*(y*z) + (y*z)*(z*z) + (z*z)*(y*z) + (z*z)*(z*z)"),
                                                {g1, z});
        REQUIRE(e);
    }
    SUBCASE("degree limit surfaces as a resource error") {
        NaPoly big = na("x");
        for (int i = 0; i < 9; ++i) big = big * na("x");
        CHECK_THROWS_AS(subalgebra_express_homogeneous(big, {NaPoly::var(c, 0)}, 8), Error);
    }
}

TEST_CASE("kurosh reduction step") {
    Ctx c = xyz_ctx();
    SUBCASE("single elementary composite reduces to the identity") {
        NaEndo phi = nendo("x + y*(y*z) ; y ; z");
        auto step = kurosh_reduce_step(phi);
        REQUIRE(step);
        CHECK(step->index == 0);
        CHECK(phi.compose(step->tau) == NaEndo::identity(c));
    }
    SUBCASE("random two-factor composites admit a reducing step") {
        std::mt19937 rng(223);
        std::vector<int> xv{0, 1};
        for (int i = 0; i < 25; ++i) {
            NaEndo phi = random_z_elementary(rng, c, xv, 2).compose(random_z_elementary(rng, c, xv, 2));
            if (phi.degree() <= 3) continue;
            auto step = kurosh_reduce_step(phi);
            REQUIRE(step);
            CHECK(phi.compose(step->tau).degree() < phi.degree());
        }
    }
    SUBCASE("the square map does not reduce") {
        CHECK(!kurosh_reduce_step(nendo("x*x ; y ; z")));
    }
    SUBCASE("chains terminate within the degree margin") {
        std::mt19937 rng(229);
        std::vector<int> xv{0, 1};
        for (int i = 0; i < 20; ++i) {
            NaEndo phi = NaEndo::identity(xyz_ctx());
            std::uniform_int_distribution<int> nf(1, 4);
            int n = nf(rng);
            for (int f = 0; f < n; ++f) phi = phi.compose(random_z_elementary(rng, xyz_ctx(), xv, 2));
            if (phi.degree() > 7) continue;
            int start = phi.degree();
            int steps = 0;
            while (phi.degree() > 3) {
                auto step = kurosh_reduce_step(phi, xv);
                REQUIRE(step);
                phi = phi.compose(step->tau);
                ++steps;
            }
            CHECK(steps <= start - 3);
        }
    }
}

TEST_CASE("z-tame decomposition") {
    Ctx c = xyz_ctx();
    SUBCASE("an elementary map with z coefficients") {
        NaEndo phi = nendo("x + z*(y*z) ; y ; z");
        NaDecomposition d = z_tame_decompose(phi, {2});
        REQUIRE(d.ok);
        CHECK(d.steps.size() == 1);
        NaEndo total = NaEndo::identity(c);
        for (const auto& s : d.steps) total = total.compose(s);
        CHECK(total == phi);
    }
    SUBCASE("random composites recompose exactly") {
        std::mt19937 rng(227);
        std::vector<int> xv{0, 1};
        int done = 0;
        while (done < 400) {
            NaEndo phi = NaEndo::identity(c);
            std::uniform_int_distribution<int> nf(1, 5);
            int n = nf(rng);
            for (int i = 0; i < n; ++i) phi = phi.compose(random_z_elementary(rng, c, xv, 2));
            if (phi.degree() > 6) continue;
            NaDecomposition d = z_tame_decompose(phi, {2});
            REQUIRE(d.ok);
            NaEndo total = NaEndo::identity(c);
            for (const auto& s : d.steps) total = total.compose(s);
            CHECK(total == phi);
            ++done;
        }
    }
    SUBCASE("the square map is rejected with a certificate") {
        NaDecomposition d = z_tame_decompose(nendo("x*x ; y ; z"), {2});
        CHECK(!d.ok);
        CHECK(!d.failure.empty());
    }
    SUBCASE("affine maps with constants decompose") {
        NaEndo phi = nendo("2*x + y + 1 ; y + z ; z");
        NaDecomposition d = z_tame_decompose(phi, {2});
        REQUIRE(d.ok);
        NaEndo total = NaEndo::identity(c);
        for (const auto& s : d.steps) total = total.compose(s);
        CHECK(total == phi);
    }
    SUBCASE("images inside the fixed subalgebra are rejected") {
        NaDecomposition d = z_tame_decompose(nendo("z*z ; y ; z"), {2});
        CHECK(!d.ok);
    }
}

TEST_CASE("lift candidate checks") {
    Ctx c = xyz_ctx();
    SUBCASE("identity") {
        LiftCheck r = lift_candidate_check(NaEndo::identity(c), {2});
        CHECK(r.is_z_automorphism);
        CHECK(r.steps.empty());
    }
    SUBCASE("a bracketing of an associative elementary image") {
        NaEndo psi = nendo("x + z*(y*z) ; y ; z");
        LiftCheck r = lift_candidate_check(psi, {2});
        REQUIRE(r.is_z_automorphism);
        NcEndo assoc = NcEndo::identity(c);
        for (const auto& s : r.assoc_steps) assoc = assoc.compose(s);
        CHECK(assoc == parse_nc_endo("x + z*y*z ; y ; z", c));
    }
    SUBCASE("no bracketing of the wild family lifts") {
        // sampled bracketings of (x + z(xz - zy), y + (xz - zy)z, z)
        for (const char* fx : {"x + z*(x*z) - z*(z*y)", "x + (z*x)*z - (z*z)*y",
                               "x + z*(x*z) - (z*z)*y"}) {
            for (const char* fy : {"y + (x*z)*z - (z*y)*z", "y + x*(z*z) - z*(y*z)"}) {
                NaEndo psi = parse_na_endo(std::string(fx) + " ; " + fy + " ; z", c);
                LiftCheck r = lift_candidate_check(psi, {2});
                CHECK(!r.is_z_automorphism);
            }
        }
    }
}

TEST_SUITE_END();
