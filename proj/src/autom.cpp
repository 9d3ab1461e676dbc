#include "freeaut/autom.hpp"

#include <array>

namespace freeaut {

namespace {

struct XYZ {
    int x, y, z;
};

XYZ xyz_indices(const Ctx& actx) {
    int xi = actx->find("x"), yi = actx->find("y"), zi = actx->find("z");
    if (xi < 0 || yi < 0 || zi < 0)
        raise(Errc::BadInput, "operation needs the rank-3 context {x, y, z}");
    return XYZ{xi, yi, zi};
}

void require_z_fixed(const NcEndo& rho, int zi) {
    if (!rho.fixes(zi)) raise(Errc::BadInput, "endomorphism does not fix z");
}

NcPoly z_only_part(const NcPoly& f, const XYZ& v) {
    // terms of the image that survive x -> 0, y -> 0
    NcPoly r(f.ctx());
    for (const auto& [w, c] : f.terms()) {
        bool zonly = true;
        for (int l : w.letters)
            if (l == v.x || l == v.y) { zonly = false; break; }
        if (zonly) r.add_term(w, c);
    }
    return r;
}

} // namespace

Verdict Verdict::make_tame(std::vector<NcEndo> steps, std::optional<Certificate> cert,
                           std::string criterion) {
    Verdict v;
    v.kind = VerdictKind::Tame;
    v.steps = std::move(steps);
    v.certificate = std::move(cert);
    v.criterion = std::move(criterion);
    return v;
}

Verdict Verdict::make_wild(StuckWitness witness, std::string criterion) {
    Verdict v;
    v.kind = VerdictKind::Wild;
    v.witness = std::move(witness);
    v.criterion = std::move(criterion);
    return v;
}

Verdict Verdict::make_inconclusive(std::string reason) {
    Verdict v;
    v.kind = VerdictKind::Inconclusive;
    v.reason = std::move(reason);
    return v;
}

CMatrix jz(const NcEndo& rho) {
    auto v = xyz_indices(rho.ctx);
    require_z_fixed(rho, v.z);
    XYLinearForm fx = xy_linear_decompose(rho.image(v.x));
    XYLinearForm fy = xy_linear_decompose(rho.image(v.y));
    CMatrix m(fx.a.ctx(), 2, 2);
    m.at(0, 0) = fx.a;
    m.at(1, 0) = fx.b;
    m.at(0, 1) = fy.a;
    m.at(1, 1) = fy.b;
    return m;
}

bool is_z_linear_automorphism(const NcEndo& rho) { return jz(rho).det().is_unit(); }

ZLinearAuto ZLinearAuto::from_endo(const NcEndo& rho) {
    auto v = xyz_indices(rho.ctx);
    require_z_fixed(rho, v.z);
    XYLinearForm fx = xy_linear_decompose(rho.image(v.x));
    XYLinearForm fy = xy_linear_decompose(rho.image(v.y));
    ZLinearAuto zl{CMatrix(fx.a.ctx(), 2, 2), fx.tail, fy.tail, rho.ctx};
    zl.a.at(0, 0) = fx.a;
    zl.a.at(1, 0) = fx.b;
    zl.a.at(0, 1) = fy.a;
    zl.a.at(1, 1) = fy.b;
    return zl;
}

NcEndo ZLinearAuto::to_endo() const {
    auto v = xyz_indices(actx);
    NcPoly x = NcPoly::var(actx, v.x), y = NcPoly::var(actx, v.y);
    NcEndo rho = NcEndo::identity(actx);
    rho.images[v.x] = apply_z_pair(a.at(0, 0), x) + apply_z_pair(a.at(1, 0), y) + tail_x;
    rho.images[v.y] = apply_z_pair(a.at(0, 1), x) + apply_z_pair(a.at(1, 1), y) + tail_y;
    return rho;
}

ZLinearAuto invert_z_linear(const ZLinearAuto& rho) {
    CMatrix inv = rho.a.inverse_2x2_unit_det();
    ZLinearAuto lin_inv{inv, NcPoly::zero(rho.actx), NcPoly::zero(rho.actx), rho.actx};
    auto v = xyz_indices(rho.actx);
    NcEndo tau_minus = NcEndo::identity(rho.actx);
    tau_minus.images[v.x] = NcPoly::var(rho.actx, v.x) - rho.tail_x;
    tau_minus.images[v.y] = NcPoly::var(rho.actx, v.y) - rho.tail_y;
    return ZLinearAuto::from_endo(tau_minus.compose(lin_inv.to_endo()));
}

NcEndo elementary_from_step(const ElemStep& s, const Ctx& actx) {
    auto v = xyz_indices(actx);
    NcEndo e = NcEndo::identity(actx);
    switch (s.kind) {
        case StepKind::E21:
            e.images[v.x] = NcPoly::var(actx, v.x) + apply_z_pair(s.q, NcPoly::var(actx, v.y));
            break;
        case StepKind::E12:
            e.images[v.y] = NcPoly::var(actx, v.y) + apply_z_pair(s.q, NcPoly::var(actx, v.x));
            break;
        case StepKind::Diag:
            e.images[v.x] = NcPoly::var(actx, v.x).scaled(s.alpha);
            e.images[v.y] = NcPoly::var(actx, v.y).scaled(s.beta);
            break;
    }
    return e;
}

NcEndo compose_all(const std::vector<NcEndo>& steps, const Ctx& ctx) {
    NcEndo acc = NcEndo::identity(ctx);
    for (const auto& s : steps) acc = acc.compose(s);
    return acc;
}

namespace {

// Turns a GE_2 certificate plus translation tails into z-elementary factors;
// diagonal steps split into two scalings so every factor moves one
// coordinate.
std::vector<NcEndo> steps_from_certificate(const Certificate& cert, const Ctx& actx,
                                           const NcPoly& tail_x, const NcPoly& tail_y) {
    auto v = xyz_indices(actx);
    std::vector<NcEndo> steps;
    for (const auto& s : cert.steps) {
        if (s.is_identity()) continue;
        if (s.kind == StepKind::Diag) {
            if (!s.alpha.is_one()) {
                NcEndo e = NcEndo::identity(actx);
                e.images[v.x] = NcPoly::var(actx, v.x).scaled(s.alpha);
                steps.push_back(std::move(e));
            }
            if (!s.beta.is_one()) {
                NcEndo e = NcEndo::identity(actx);
                e.images[v.y] = NcPoly::var(actx, v.y).scaled(s.beta);
                steps.push_back(std::move(e));
            }
        } else {
            steps.push_back(elementary_from_step(s, actx));
        }
    }
    if (!tail_x.is_zero()) {
        NcEndo e = NcEndo::identity(actx);
        e.images[v.x] = NcPoly::var(actx, v.x) + tail_x;
        steps.push_back(std::move(e));
    }
    if (!tail_y.is_zero()) {
        NcEndo e = NcEndo::identity(actx);
        e.images[v.y] = NcPoly::var(actx, v.y) + tail_y;
        steps.push_back(std::move(e));
    }
    return steps;
}

} // namespace

Verdict decide_z_tame_linear(const NcEndo& rho) {
    ZLinearAuto zl = ZLinearAuto::from_endo(rho);
    Ge2Result res = ge2_membership(zl.a);  // throws NotInvertible when not an automorphism
    if (!res.member) return Verdict::make_wild(*res.witness, kCritLinearZFixingGe2);
    auto steps = steps_from_certificate(res.cert, rho.ctx, zl.tail_x, zl.tail_y);
    if (!(compose_all(steps, rho.ctx) == rho))
        raise(Errc::Internal, "tame factorization failed to recompose");
    return Verdict::make_tame(std::move(steps), std::move(res.cert), kCritLinearZFixingGe2);
}

Verdict decide_tame_coordinate_linear(const NcPoly& f) {
    XYLinearForm form = xy_linear_decompose(f);
    if (form.a.is_zero() && form.b.is_zero())
        return Verdict::make_inconclusive("the x,y part vanishes; the input cannot be a coordinate");
    CompleteResult comp = complete_to_ge2(form.a, form.b);
    if (!comp.completed) return Verdict::make_wild(*comp.witness, kCritCoordinateLinearEuclid);
    auto steps = steps_from_certificate(comp.cert, f.ctx(), form.tail, NcPoly::zero(f.ctx()));
    NcEndo total = compose_all(steps, f.ctx());
    int xi = f.ctx()->index_of("x");
    if (!(total.image(xi) == f)) raise(Errc::Internal, "coordinate factorization does not send x to f");
    return Verdict::make_tame(std::move(steps), std::move(comp.cert), kCritCoordinateLinearEuclid);
}

Verdict decide_wild_coordinate(const NcPoly& f) {
    auto v = xyz_indices(f.ctx());
    if (!z_only_part(f, v).is_zero())
        raise(Errc::HypothesisViolated, "f(0,0,z) != 0: strip the z-only part first");
    NcPoly f1 = f.homogeneous_component_in(1, {v.x, v.y});
    if (f1.is_zero())
        return Verdict::make_inconclusive("the linear part in x,y vanishes; criterion does not apply");
    XYLinearForm form = xy_linear_decompose(f1);
    EuclidOutcome eu = euclid_reduce_pair(form.a, form.b);
    if (!eu.reduced) return Verdict::make_wild(*eu.witness, kCritCoordinateLinearPart);
    if (f == f1) return decide_tame_coordinate_linear(f);
    return Verdict::make_inconclusive(
        "linear part reduces; the wildness criterion is sufficient only, nonlinear terms remain undecided");
}

namespace {

// Composite tau_c . rho with tau_c = (x + c1, y + c2, z): substitutes
// x -> x + c1, y -> y + c2 into the images of rho.
NcEndo shift_then(const NcEndo& rho, const XYZ& v, long c1, long c2) {
    NcEndo tau = NcEndo::identity(rho.ctx);
    tau.images[v.x] = NcPoly::var(rho.ctx, v.x) + NcPoly::constant(rho.ctx, Rational(c1));
    tau.images[v.y] = NcPoly::var(rho.ctx, v.y) + NcPoly::constant(rho.ctx, Rational(c2));
    return tau.compose(rho);
}

} // namespace

Verdict decide_wild_automorphism_zfixing(const NcEndo& rho) {
    auto v = xyz_indices(rho.ctx);
    require_z_fixed(rho, v.z);

    NcPoly fx = rho.image(v.x), fy = rho.image(v.y);
    bool xy_linear;
    {
        NcPoly fx_stripped = fx - z_only_part(fx, v);
        NcPoly fy_stripped = fy - z_only_part(fy, v);
        xy_linear = fx_stripped == fx_stripped.homogeneous_component_in(1, {v.x, v.y}) &&
                    fy_stripped == fy_stripped.homogeneous_component_in(1, {v.x, v.y});
    }

    static constexpr std::array<std::pair<long, long>, 4> kShifts{
        {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    for (auto [c1, c2] : kShifts) {
        NcEndo sigma = (c1 == 0 && c2 == 0) ? rho : shift_then(rho, v, c1, c2);
        NcPoly f = sigma.image(v.x), g = sigma.image(v.y);
        f -= z_only_part(f, v);
        g -= z_only_part(g, v);
        NcEndo lin = NcEndo::identity(rho.ctx);
        lin.images[v.x] = f.homogeneous_component_in(1, {v.x, v.y});
        lin.images[v.y] = g.homogeneous_component_in(1, {v.x, v.y});
        CMatrix m = jz(lin);
        if (!m.det().is_unit()) {
            if (c1 == 0 && c2 == 0)
                return Verdict::make_inconclusive("the linear part is not an automorphism");
            continue;
        }
        Ge2Result res = ge2_membership(m);
        if (!res.member)
            return Verdict::make_wild(*res.witness, xy_linear && c1 == 0 && c2 == 0
                                                        ? kCritLinearZFixingGe2
                                                        : kCritAutomorphismLinearPart);
        if (c1 == 0 && c2 == 0 && xy_linear) return decide_z_tame_linear(rho);
    }
    return Verdict::make_inconclusive(
        "no shifted linear part is z-wild; the wildness criterion is sufficient only");
}

NcEndo anick() { return anick_m(1); }

NcEndo anick_m(int m) {
    if (m < 1) raise(Errc::BadInput, "the power must be a positive integer");
    Ctx actx = xyz_ctx();
    NcPoly x = NcPoly::var(actx, 0), y = NcPoly::var(actx, 1), z = NcPoly::var(actx, 2);
    NcPoly core = x * z - z * y;
    NcPoly power = NcPoly::one(actx);
    for (int i = 0; i < m; ++i) power = power * core;
    NcEndo e = NcEndo::identity(actx);
    e.images[0] = x + z * power;
    e.images[1] = y + power * z;
    return e;
}

Ctx tz_ctx() { return make_ctx({"t", "z"}); }

NcEndo sigma_h(const NcPoly& h) {
    Ctx hctx = h.ctx();
    int ti = hctx->find("t"), zi = hctx->find("z");
    if (ti < 0 || zi < 0 || hctx->size() != 2)
        raise(Errc::BadInput, "h must live in the two-variable context (t, z)");
    if (!h.constant_term().is_zero())
        raise(Errc::HypothesisViolated, "h(0,0) must vanish");
    Ctx actx = xyz_ctx();
    NcPoly x = NcPoly::var(actx, 0), y = NcPoly::var(actx, 1), z = NcPoly::var(actx, 2);
    NcPoly core = x * z - z * y;
    NcPoly hh = h.substitute({{ti, core}, {zi, z}});
    NcEndo e = NcEndo::identity(actx);
    e.images[0] = x + z * hh;
    e.images[1] = y + hh * z;
    return e;
}

NcEndo elementary_endo(const Ctx& ctx, int j, const Rational& alpha, const NcPoly& f) {
    if (alpha.is_zero()) raise(Errc::BadInput, "elementary automorphism needs alpha != 0");
    require_same_ctx(ctx, f.ctx());
    for (const auto& [w, c] : f.terms()) {
        (void)c;
        for (int l : w.letters)
            if (l == j) raise(Errc::BadInput, "the added polynomial must not depend on the moved variable");
    }
    NcEndo e = NcEndo::identity(ctx);
    e.images[static_cast<size_t>(j)] = NcPoly::var(ctx, j).scaled(alpha) + f;
    return e;
}

NcEndo translation_endo(const Ctx& actx, const NcPoly& px, const NcPoly& py) {
    auto v = xyz_indices(actx);
    for (const NcPoly* p : {&px, &py})
        for (const auto& [w, c] : p->terms()) {
            (void)c;
            for (int l : w.letters)
                if (l != v.z) raise(Errc::BadInput, "translations take z-only polynomials");
        }
    NcEndo e = NcEndo::identity(actx);
    e.images[v.x] = NcPoly::var(actx, v.x) + px;
    e.images[v.y] = NcPoly::var(actx, v.y) + py;
    return e;
}

std::optional<std::pair<Rational, NcPoly>> moved_coordinate_decomposition(const NcEndo& rho, int j) {
    for (int i = 0; i < rho.ctx->size(); ++i)
        if (i != j && !rho.fixes(i)) return std::nullopt;
    NcPoly img = rho.image(j);
    Rational alpha = img.coeff(Word{{j}});
    NcPoly rest = img - NcPoly::var(rho.ctx, j).scaled(alpha);
    for (const auto& [w, c] : rest.terms()) {
        (void)c;
        for (int l : w.letters)
            if (l == j) return std::nullopt;
    }
    if (alpha.is_zero()) return std::nullopt;
    return std::make_pair(alpha, rest);
}

} // namespace freeaut
