#include "freeaut/metab.hpp"

#include <algorithm>
#include <array>

#include "freeaut/linsolve.hpp"

namespace freeaut {

CMatrix jm(const NcEndo& phi) {
    UVContext uvc = make_uv_context(phi.ctx);
    int n = phi.ctx->size();
    CMatrix m(uvc.uv, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = metab_derivative(phi.image(j), i, uvc);
    return m;
}

MetabEndoView metab_view(const NcEndo& phi) { return MetabEndoView{phi, jm(phi)}; }

bool is_metab_automorphism(const NcEndo& phi) { return jm(phi).det().is_unit(); }

CPoly commutator_ideal_residual(const NcPoly& f) {
    UVContext uvc = make_uv_context(f.ctx());
    CPoly sum(uvc.uv);
    for (int i = 0; i < f.ctx()->size(); ++i) {
        CPoly diff = CPoly::var(uvc.uv, uvc.u(i)) - CPoly::var(uvc.uv, uvc.v(i));
        sum += diff * metab_derivative(f, i, uvc);
    }
    return sum;
}

bool commutator_ideal_member(const NcPoly& f) {
    return f.constant_term().is_zero() && commutator_ideal_residual(f).is_zero();
}

CMatrix j2_bar(const NcEndo& phi) {
    const Ctx& actx = phi.ctx;
    int xi = actx->find("x"), yi = actx->find("y"), zi = actx->find("z");
    if (actx->size() != 3 || xi < 0 || yi < 0 || zi < 0)
        raise(Errc::BadInput, "j2 needs the rank-3 context {x, y, z}");
    for (int i = 0; i < 3; ++i)
        if (!commutator_ideal_member(phi.image(i) - NcPoly::var(actx, i)))
            raise(Errc::IdentityInductionFailed,
                  "endomorphism does not induce the identity on the commutative quotient");

    UVContext uvc = make_uv_context(actx);
    CMatrix full = jm(phi);
    std::vector<int> kill{uvc.u(xi), uvc.u(yi), uvc.v(xi), uvc.v(yi)};
    Ctx zz = z1z2_ctx();
    std::vector<int> varmap(static_cast<size_t>(uvc.uv->size()), -1);
    varmap[static_cast<size_t>(uvc.u(zi))] = 0;
    varmap[static_cast<size_t>(uvc.v(zi))] = 1;

    // order rows/columns as (x, y, z) regardless of context order
    std::array<int, 3> order{xi, yi, zi};
    CMatrix spec(zz, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            spec.at(i, j) = full.at(order[i], order[j]).at_zero(kill).project(zz, varmap);

    const CPoly one = CPoly::constant(zz, Rational(1));
    auto constant_free = [](const CPoly& p) { return p.constant_term().is_zero(); };
    bool shape = spec.at(2, 0).is_zero() && spec.at(2, 1).is_zero() && spec.at(2, 2) == one &&
                 constant_free(spec.at(0, 0) - one) && constant_free(spec.at(1, 1) - one) &&
                 constant_free(spec.at(0, 1)) && constant_free(spec.at(1, 0)) &&
                 constant_free(spec.at(0, 2)) && constant_free(spec.at(1, 2));
    if (!shape) raise(Errc::ShapeViolation, "specialized metabelian Jacobian has an unexpected shape");

    CMatrix top(zz, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) top.at(i, j) = spec.at(i, j);
    return top;
}

Verdict umirbaev_wildness_evidence(const NcEndo& phi) {
    CMatrix j2 = j2_bar(phi);
    Ge2Result res = ge2_membership(j2);
    if (!res.member) return Verdict::make_wild(*res.witness, kCritMetabelianJ2);
    return Verdict::make_inconclusive(
        "j2 factors into elementary matrices; this is necessary for tameness but not sufficient");
}

namespace {

Word min_rotation(const Word& w) {
    if (w.letters.size() < 2) return w;
    Word best = w;
    Word cur = w;
    for (size_t r = 1; r < w.letters.size(); ++r) {
        std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
        if (cur.letters < best.letters) best = cur;
    }
    return best;
}

} // namespace

CyclicClass cyclic_class(const NcPoly& f) {
    NcPoly rep(f.ctx());
    for (const auto& [w, c] : f.terms()) rep.add_term(min_rotation(w), c);
    return CyclicClass{std::move(rep)};
}

TraceResult trace_test(const NcEndo& sigma, FoxSide side) {
    const Ctx& ctx = sigma.ctx;
    int n = ctx->size();
    std::vector<NcPoly> diffs;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        diffs.push_back(sigma.image(i) - NcPoly::var(ctx, i));
        if (!diffs.back().is_zero()) any = true;
    }
    TraceResult out;
    if (!any) {
        out.note = "the endomorphism is the identity";
        return out;
    }
    int k = -1;
    for (const auto& d : diffs)
        for (const auto& [w, c] : d.terms()) {
            (void)c;
            if (k < 0 || w.degree() < k) k = w.degree();
        }
    if (k < 2) {
        out.note = "the difference from the identity has a component of degree < 2";
        return out;
    }
    out.k = k;
    NcPoly trace(ctx);
    for (int i = 0; i < n; ++i) trace += fox(side, diffs[i].homogeneous_component(k), i);
    out.residual = cyclic_class(trace.homogeneous_component(k - 1));
    out.verdict = out.residual.is_zero() ? TraceVerdict::Pass : TraceVerdict::Fail;
    return out;
}

namespace {

// Multilinear component: words of length 3 using each of x, y, z once.
NcPoly multilinear_xyz(const NcPoly& f) {
    const Ctx& ctx = f.ctx();
    NcPoly r(ctx);
    for (const auto& [w, c] : f.terms()) {
        if (w.letters.size() != 3) continue;
        std::vector<int> sorted = w.letters;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == std::vector<int>{0, 1, 2}) r.add_term(w, c);
    }
    return r;
}

// Expresses a cyclic class as a rational multiple of the class of
// xyz - xzy.
Rational multiple_of_base_class(const CyclicClass& cls, const CyclicClass& base) {
    if (cls.is_zero()) return Rational(0);
    const auto& terms = cls.rep.terms();
    Rational base_coeff = base.rep.coeff(terms.begin()->first);
    if (base_coeff.is_zero())
        raise(Errc::Internal, "trace residual is not proportional to the base cyclic class");
    Rational lambda = terms.begin()->second / base_coeff;
    if (!(base.rep.scaled(lambda) == cls.rep))
        raise(Errc::Internal, "trace residual is not proportional to the base cyclic class");
    return lambda;
}

} // namespace

ObstructionReport tau_lift_obstruction() {
    Ctx actx = xyz_ctx();
    NcPoly x = NcPoly::var(actx, 0), y = NcPoly::var(actx, 1), z = NcPoly::var(actx, 2);
    NcPoly cxy = commutator(x, y), cxz = commutator(x, z), cyz = commutator(y, z);

    struct BasisEntry {
        NcPoly poly;
        int var;
    };
    std::vector<BasisEntry> basis{
        {cxy * cxz, 0}, {cxz * cxy, 0},   // candidates in the x image
        {cxy * cyz, 1}, {cyz * cxy, 1},   // y image
        {cxz * cyz, 2}, {cyz * cxz, 2},   // z image
    };

    CyclicClass base = cyclic_class(x * y * z - x * z * y);
    NcPoly known = x * x * (y * z - z * y);  // the fixed degree-4 part of the x image

    ObstructionReport rep;
    for (const auto& b : basis) rep.basis.push_back(b.poly.str());
    for (FoxSide side : {FoxSide::Right, FoxSide::Left}) {
        std::vector<Rational> coeffs;
        for (const auto& b : basis)
            coeffs.push_back(
                multiple_of_base_class(cyclic_class(multilinear_xyz(fox(side, b.poly, b.var))), base));
        Rational offset =
            multiple_of_base_class(cyclic_class(multilinear_xyz(fox(side, known, 0))), base);
        if (side == FoxSide::Right) {
            rep.right_coeffs = std::move(coeffs);
            rep.right_offset = offset;
        } else {
            rep.left_coeffs = std::move(coeffs);
            rep.left_offset = offset;
        }
    }

    // Solvability of { right_coeffs . t + right_offset = 0,
    //                  left_coeffs  . t + left_offset  = 0 }.
    auto as_vec = [](const std::vector<Rational>& v) {
        std::map<int, Rational> m;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) m.emplace(static_cast<int>(i), v[i]);
        return m;
    };
    auto augmented = [&](const std::vector<Rational>& v, const Rational& off) {
        auto m = as_vec(v);
        if (!off.is_zero()) m.emplace(-1, off);  // slot below all coefficient keys
        return m;
    };
    // inconsistent iff the all-but-offset rows span strictly less than the
    // augmented rows
    SpanSolver<int> plain, aug;
    plain.add(as_vec(rep.right_coeffs));
    plain.add(as_vec(rep.left_coeffs));
    aug.add(augmented(rep.right_coeffs, rep.right_offset));
    aug.add(augmented(rep.left_coeffs, rep.left_offset));
    rep.consistent = plain.rank() == aug.rank();
    return rep;
}

} // namespace freeaut
