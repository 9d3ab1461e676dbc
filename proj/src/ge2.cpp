#include "freeaut/ge2.hpp"

namespace freeaut {

namespace {

// Applies a step matrix to a column vector (a, b) in place.
void apply_to_column(const ElemStep& s, CPoly& a, CPoly& b) {
    switch (s.kind) {
        case StepKind::E12: a += s.q * b; break;
        case StepKind::E21: b += s.q * a; break;
        case StepKind::Diag:
            a = a.scaled(s.alpha);
            b = b.scaled(s.beta);
            break;
    }
}

} // namespace

ElemStep ElemStep::diag(const Ctx& ctx, Rational a, Rational b) {
    if (a.is_zero() || b.is_zero()) raise(Errc::BadInput, "diagonal step needs nonzero entries");
    return ElemStep{StepKind::Diag, CPoly::zero(ctx), std::move(a), std::move(b)};
}

bool ElemStep::is_identity() const {
    switch (kind) {
        case StepKind::E12:
        case StepKind::E21: return q.is_zero();
        case StepKind::Diag: return alpha.is_one() && beta.is_one();
    }
    return false;
}

ElemStep ElemStep::inverse() const {
    switch (kind) {
        case StepKind::E12: return e12(-q);
        case StepKind::E21: return e21(-q);
        case StepKind::Diag: return ElemStep{StepKind::Diag, q, alpha.inverse(), beta.inverse()};
    }
    raise(Errc::Internal, "bad step kind");
}

CMatrix ElemStep::matrix(const Ctx& ctx) const {
    CMatrix m = CMatrix::identity(ctx, 2);
    switch (kind) {
        case StepKind::E12: m.at(0, 1) = q; break;
        case StepKind::E21: m.at(1, 0) = q; break;
        case StepKind::Diag:
            m.at(0, 0) = CPoly::constant(ctx, alpha);
            m.at(1, 1) = CPoly::constant(ctx, beta);
            break;
    }
    return m;
}

CMatrix recompose(const std::vector<ElemStep>& steps, const Ctx& ctx) {
    CMatrix m = CMatrix::identity(ctx, 2);
    for (const auto& s : steps) m = m * s.matrix(ctx);
    return m;
}

bool certificate_valid(const Certificate& cert) {
    return recompose(cert.steps, cert.target.ctx()) == cert.target;
}

std::string StuckWitness::describe() const {
    switch (reason) {
        case StuckReason::NeitherLeadingDivides:
            return "neither leading form divides the other";
        case StuckReason::ZeroPartner:
            return "one entry is zero and the other is not a nonzero constant";
    }
    return "";
}

bool witness_stuck(const StuckWitness& w) {
    if (w.a.is_zero() || w.b.is_zero()) {
        const CPoly& other = w.a.is_zero() ? w.b : w.a;
        return !other.is_unit() && !(w.a.is_zero() && w.b.is_zero());
    }
    return !exact_divide_homogeneous(leading_form(w.a), leading_form(w.b)) &&
           !exact_divide_homogeneous(leading_form(w.b), leading_form(w.a));
}

EuclidOutcome euclid_reduce_pair(const CPoly& a0, const CPoly& b0) {
    if (a0.is_zero() && b0.is_zero()) raise(Errc::ZeroInput, "euclidean reduction of (0, 0)");
    require_same_ctx(a0.ctx(), b0.ctx());
    CPoly a = a0, b = b0;
    EuclidOutcome out;
    auto step = [&](ElemStep s) {
        apply_to_column(s, a, b);
        out.applied.push_back(std::move(s));
    };
    for (;;) {
        if (b.is_zero()) {
            if (a.is_unit()) {
                out.reduced = true;
                out.unit = a.constant_value();
                return out;
            }
            out.witness = StuckWitness{a, b, StuckReason::ZeroPartner};
            return out;
        }
        if (a.is_zero()) {
            if (!b.is_unit()) {
                out.witness = StuckWitness{a, b, StuckReason::ZeroPartner};
                return out;
            }
            // (0, beta) -> (beta, beta) -> (beta, 0)
            step(ElemStep::e12(CPoly::constant(a.ctx(), Rational(1))));
            step(ElemStep::e21(CPoly::constant(a.ctx(), Rational(-1))));
            continue;
        }
        // Prefer reducing a by b when both directions divide.
        if (auto q = exact_divide_homogeneous(leading_form(a), leading_form(b))) {
            step(ElemStep::e12(-*q));
        } else if (auto q2 = exact_divide_homogeneous(leading_form(b), leading_form(a))) {
            step(ElemStep::e21(-*q2));
        } else {
            out.witness = StuckWitness{a, b, StuckReason::NeitherLeadingDivides};
            return out;
        }
    }
}

Ge2Result ge2_membership(const CMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) raise(Errc::BadInput, "ge2 membership needs a 2x2 matrix");
    CPoly dd = m.det();
    if (!dd.is_unit()) raise(Errc::NotInvertible, "determinant is not a nonzero constant");

    EuclidOutcome eu = euclid_reduce_pair(m.at(0, 0), m.at(1, 0));
    if (!eu.reduced) return Ge2Result{false, {}, eu.witness};

    const Ctx& ctx = m.ctx();
    // W = S_k ... S_1 * M has first column (alpha, 0).
    CMatrix w = m;
    std::vector<ElemStep> applied = eu.applied;
    for (const auto& s : eu.applied) w = s.matrix(ctx) * w;
    Rational alpha = eu.unit;
    CPoly c = w.at(0, 1);
    if (!w.at(1, 1).is_unit() || !w.at(1, 0).is_zero())
        raise(Errc::Internal, "euclidean reduction left an unexpected matrix shape");
    Rational delta = w.at(1, 1).constant_value();
    if (!c.is_zero()) applied.push_back(ElemStep::e12(c.scaled(-delta.inverse())));
    ElemStep norm = ElemStep{StepKind::Diag, CPoly::zero(ctx), alpha.inverse(), delta.inverse()};
    if (!norm.is_identity()) applied.push_back(norm);

    // S_n ... S_1 M = I, hence M = S_1^-1 S_2^-1 ... S_n^-1.
    Certificate cert;
    cert.target = m;
    for (const auto& s : applied) {
        ElemStep inv = s.inverse();
        if (!inv.is_identity()) cert.steps.push_back(std::move(inv));
    }
    if (!certificate_valid(cert)) raise(Errc::Internal, "ge2 certificate failed to recompose");
    return Ge2Result{true, std::move(cert), std::nullopt};
}

CompleteResult complete_to_ge2(const CPoly& a, const CPoly& b) {
    EuclidOutcome eu = euclid_reduce_pair(a, b);
    if (!eu.reduced) return CompleteResult{false, {}, {}, {}, eu.witness};

    const Ctx& ctx = a.ctx();
    // (c, d) = S_1^-1 ... S_k^-1 (0, 1); all euclid steps have det 1.
    CPoly c = CPoly::zero(ctx), d = CPoly::constant(ctx, Rational(1));
    for (auto it = eu.applied.rbegin(); it != eu.applied.rend(); ++it)
        apply_to_column(it->inverse(), c, d);

    Certificate cert;
    cert.target = CMatrix(ctx, 2, 2);
    cert.target.at(0, 0) = a;
    cert.target.at(0, 1) = c;
    cert.target.at(1, 0) = b;
    cert.target.at(1, 1) = d;
    for (const auto& s : eu.applied) {
        ElemStep inv = s.inverse();
        if (!inv.is_identity()) cert.steps.push_back(std::move(inv));
    }
    if (!eu.unit.is_one())
        cert.steps.push_back(ElemStep{StepKind::Diag, CPoly::zero(ctx), eu.unit, Rational(1)});
    if (!certificate_valid(cert)) raise(Errc::Internal, "completion certificate failed to recompose");
    return CompleteResult{true, std::move(c), std::move(d), std::move(cert), std::nullopt};
}

} // namespace freeaut
