#include "freeaut/natree.hpp"

#include <algorithm>
#include <sstream>

#include "freeaut/linsolve.hpp"

namespace freeaut {

NaWord NaWord::leaf(int var) {
    if (var < 0) raise(Errc::BadInput, "negative variable index");
    auto n = std::make_shared<Node>();
    n->var = var;
    n->deg = 1;
    return NaWord(std::move(n));
}

NaWord NaWord::prod(const NaWord& l, const NaWord& r) {
    auto n = std::make_shared<Node>();
    n->l = l.node_;
    n->r = r.node_;
    n->deg = l.degree() + r.degree();
    n->var = -1;
    return NaWord(std::move(n));
}

int NaWord::cmp(const Node* a, const Node* b) {
    if (a == b) return 0;
    if (a->deg != b->deg) return a->deg < b->deg ? -1 : 1;
    bool la = a->var >= 0, lb = b->var >= 0;
    if (la && lb) return a->var == b->var ? 0 : (a->var < b->var ? -1 : 1);
    if (la != lb) return la ? -1 : 1;  // cannot happen at equal degree > 1
    if (int c = cmp(a->l.get(), b->l.get())) return c;
    return cmp(a->r.get(), b->r.get());
}

Word NaWord::flatten() const {
    Word w;
    auto rec = [&](auto&& self, const Node* n) -> void {
        if (n->var >= 0) {
            w.letters.push_back(n->var);
            return;
        }
        self(self, n->l.get());
        self(self, n->r.get());
    };
    rec(rec, node_.get());
    return w;
}

bool NaWord::contains_any(const std::vector<int>& vars) const {
    auto rec = [&](auto&& self, const Node* n) -> bool {
        if (n->var >= 0) return std::find(vars.begin(), vars.end(), n->var) != vars.end();
        return self(self, n->l.get()) || self(self, n->r.get());
    };
    return rec(rec, node_.get());
}

NaPoly NaPoly::constant(Ctx ctx, const Rational& c) {
    NaPoly p(std::move(ctx));
    p.constant_ = c;
    return p;
}

NaPoly NaPoly::var(Ctx ctx, int index) {
    NaPoly p(std::move(ctx));
    if (index < 0 || index >= p.ctx_->size()) raise(Errc::BadInput, "variable index out of range");
    p.terms_.emplace(NaWord::leaf(index), Rational(1));
    return p;
}

int NaPoly::degree() const {
    if (!terms_.empty()) return terms_.rbegin()->first.degree();
    return constant_.is_zero() ? -1 : 0;
}

void NaPoly::add_term(const NaWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NaPoly::flatten(const Ctx& target) const {
    if (target->names != ctx_->names) raise(Errc::ContextMismatch, "flatten context mismatch");
    NcPoly r = NcPoly::constant(target, constant_);
    for (const auto& [w, c] : terms_) r.add_term(w.flatten(), c);
    return r;
}

NaPoly NaPoly::operator-() const {
    NaPoly r(ctx_);
    r.constant_ = -constant_;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NaPoly& NaPoly::operator+=(const NaPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    constant_ += o.constant_;
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NaPoly& NaPoly::operator-=(const NaPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    constant_ -= o.constant_;
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NaPoly operator*(const NaPoly& a, const NaPoly& b) {
    require_same_ctx(a.ctx_, b.ctx_);
    NaPoly r(a.ctx_);
    r.constant_ = a.constant_ * b.constant_;
    for (const auto& [w, c] : b.terms_) r.add_term(w, a.constant_ * c);
    for (const auto& [w, c] : a.terms_) r.add_term(w, c * b.constant_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(NaWord::prod(wa, wb), ca * cb);
    return r;
}

NaPoly NaPoly::scaled(const Rational& c) const {
    NaPoly r(ctx_);
    if (c.is_zero()) return r;
    r.constant_ = constant_ * c;
    for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
    return r;
}

bool operator==(const NaPoly& a, const NaPoly& b) {
    return same_ctx(a.ctx_, b.ctx_) && a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

NaPoly NaPoly::homogeneous_component(int d) const {
    NaPoly r(ctx_);
    if (d == 0) {
        r.constant_ = constant_;
        return r;
    }
    for (const auto& [w, c] : terms_)
        if (w.degree() == d) r.terms_.emplace(w, c);
    return r;
}

NaPoly NaPoly::substitute(const std::map<int, NaPoly>& images) const {
    Ctx target = ctx_;
    if (!images.empty()) target = images.begin()->second.ctx();
    for (const auto& [v, img] : images) {
        (void)v;
        require_same_ctx(target, img.ctx());
    }
    NaPoly r = NaPoly::constant(target, constant_);
    auto eval = [&](auto&& self, const NaWord& w) -> NaPoly {
        if (w.is_leaf()) {
            auto it = images.find(w.var());
            if (it == images.end())
                raise(Errc::MissingImage, "no image for variable " + ctx_->names[w.var()]);
            return it->second;
        }
        return self(self, w.left()) * self(self, w.right());
    };
    for (const auto& [w, c] : terms_) r += eval(eval, w).scaled(c);
    return r;
}

bool NaPoly::depends_on_any(const std::vector<int>& vars) const {
    for (const auto& [w, c] : terms_) {
        (void)c;
        if (w.contains_any(vars)) return true;
    }
    return false;
}

std::string NaPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit_sign = [&](Rational& a) {
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
    };
    auto render = [&](auto&& self, const NaWord& w) -> std::string {
        if (w.is_leaf()) return ctx_->names[w.var()];
        auto wrap = [&](const NaWord& c) {
            std::string s = self(self, c);
            return c.is_leaf() ? s : "(" + s + ")";
        };
        return wrap(w.left()) + "*" + wrap(w.right());
    };
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational a = it->second;
        emit_sign(a);
        std::string body = render(render, it->first);
        if (!a.is_one()) {
            out << a.str() << "*";
            if (!it->first.is_leaf()) body = "(" + body + ")";
        }
        out << body;
    }
    if (!constant_.is_zero()) {
        Rational a = constant_;
        emit_sign(a);
        out << a.str();
    }
    return out.str();
}

NaPoly leading_form(const NaPoly& f) {
    if (f.is_zero()) raise(Errc::ZeroInput, "leading form of the zero polynomial");
    return f.homogeneous_component(f.degree());
}

NaEndo NaEndo::identity(Ctx c) {
    NaEndo e;
    e.ctx = c;
    for (int i = 0; i < c->size(); ++i) e.images.push_back(NaPoly::var(c, i));
    return e;
}

NaPoly NaEndo::apply(const NaPoly& f) const {
    require_same_ctx(ctx, f.ctx());
    std::map<int, NaPoly> m;
    for (int i = 0; i < ctx->size(); ++i) m.emplace(i, images[i]);
    return f.substitute(m);
}

NaEndo NaEndo::compose(const NaEndo& other) const {
    require_same_ctx(ctx, other.ctx);
    NaEndo r;
    r.ctx = ctx;
    for (const auto& img : other.images) r.images.push_back(apply(img));
    return r;
}

bool NaEndo::fixes(int var) const { return images[static_cast<size_t>(var)] == NaPoly::var(ctx, var); }

int NaEndo::degree() const {
    int d = 0;
    for (const auto& f : images) {
        if (f.is_zero()) raise(Errc::BadInput, "endomorphism with a zero image has no degree");
        d += f.degree();
    }
    return d;
}

std::string NaEndo::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < images.size(); ++i) out << (i ? " ; " : "") << images[i].str();
    return out.str();
}

NaPoly NaExpression::evaluate(const std::vector<NaPoly>& gens, const Ctx& ctx) const {
    NaPoly r(ctx);
    auto eval = [&](auto&& self, const Tree* t) -> NaPoly {
        if (t->gen >= 0) return gens[static_cast<size_t>(t->gen)];
        return self(self, t->l.get()) * self(self, t->r.get());
    };
    for (const auto& [c, t] : terms) r += eval(eval, t.get()).scaled(c);
    return r;
}

std::string NaExpression::str(const std::vector<std::string>& gen_names) const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    auto render = [&](auto&& self, const Tree* t) -> std::string {
        if (t->gen >= 0) return gen_names[static_cast<size_t>(t->gen)];
        auto wrap = [&](const Tree* c) {
            std::string s = self(self, c);
            return c->gen >= 0 ? s : "(" + s + ")";
        };
        return wrap(t->l.get()) + "*" + wrap(t->r.get());
    };
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [c, t] = terms[i];
        if (i) out << " + ";
        if (!c.is_one()) out << c.str() << "*";
        out << render(render, t.get());
    }
    return out.str();
}

namespace {

constexpr long kMaxBracketings = 200000;

// All formal bracketings of the generators with the given value degree.
const std::vector<NaExpression::TreePtr>& bracketings(
    int d, const std::vector<int>& gen_degrees,
    std::map<int, std::vector<NaExpression::TreePtr>>& memo, long& budget) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::vector<NaExpression::TreePtr> out;
    for (size_t g = 0; g < gen_degrees.size(); ++g) {
        if (gen_degrees[g] == d) {
            auto t = std::make_shared<NaExpression::Tree>();
            t->gen = static_cast<int>(g);
            t->deg = d;
            out.push_back(std::move(t));
        }
    }
    for (int d1 = 1; d1 < d; ++d1) {
        const auto& ls = bracketings(d1, gen_degrees, memo, budget);
        const auto& rs = bracketings(d - d1, gen_degrees, memo, budget);
        for (const auto& l : ls)
            for (const auto& r : rs) {
                if (--budget < 0)
                    raise(Errc::ResourceLimit, "bracketing enumeration exceeded the configured budget");
                auto t = std::make_shared<NaExpression::Tree>();
                t->l = l;
                t->r = r;
                t->deg = d;
                out.push_back(std::move(t));
            }
    }
    return memo.emplace(d, std::move(out)).first->second;
}

} // namespace

std::optional<NaExpression> subalgebra_express_homogeneous(const NaPoly& g,
                                                           const std::vector<NaPoly>& gens,
                                                           int degree_limit) {
    if (g.is_zero()) return NaExpression{};
    if (g.degree() == 0 || !g.constant_term().is_zero() ||
        !(g == g.homogeneous_component(g.degree())))
        raise(Errc::NonHomogeneous, "membership target must be homogeneous of degree >= 1");
    std::vector<int> gen_degrees;
    for (const auto& p : gens) {
        if (p.is_zero() || p.degree() < 1 || !(p == p.homogeneous_component(p.degree())))
            raise(Errc::NonHomogeneous, "generators must be homogeneous of degree >= 1");
        gen_degrees.push_back(p.degree());
    }
    int d = g.degree();
    if (d > degree_limit)
        raise(Errc::ResourceLimit, "membership degree exceeds the configured limit");

    std::map<int, std::vector<NaExpression::TreePtr>> memo;
    long budget = kMaxBracketings;
    const auto& trees = bracketings(d, gen_degrees, memo, budget);

    SpanSolver<NaWord> solver;
    for (const auto& t : trees) {
        NaExpression e;
        e.terms.emplace_back(Rational(1), t);
        solver.add(e.evaluate(gens, g.ctx()).terms());
    }
    auto sol = solver.solve(g.terms());
    if (!sol) return std::nullopt;
    NaExpression e;
    for (size_t i = 0; i < trees.size(); ++i)
        if (!(*sol)[i].is_zero()) e.terms.emplace_back((*sol)[i], trees[i]);
    return e;
}

std::optional<KuroshStep> kurosh_reduce_step(const NaEndo& phi,
                                             const std::vector<int>& candidate_slots,
                                             int degree_limit) {
    int n = phi.ctx->size();
    for (int i : candidate_slots) {
        const NaPoly& fi = phi.image(i);
        if (fi.is_zero() || fi.degree() < 1) continue;
        std::vector<NaPoly> gens;
        std::vector<int> gen_vars;
        for (int j = 0; j < n; ++j) {
            if (j == i || phi.image(j).is_zero() || phi.image(j).degree() < 1) continue;
            gens.push_back(leading_form(phi.image(j)));
            gen_vars.push_back(j);
        }
        auto expr = subalgebra_express_homogeneous(leading_form(fi), gens, degree_limit);
        if (!expr) continue;
        std::vector<NaPoly> slot_vars;
        for (int j : gen_vars) slot_vars.push_back(NaPoly::var(phi.ctx, j));
        NaPoly g = expr->evaluate(slot_vars, phi.ctx);
        NaEndo tau = NaEndo::identity(phi.ctx);
        tau.images[static_cast<size_t>(i)] = NaPoly::var(phi.ctx, i) - g;
        return KuroshStep{i, std::move(*expr), std::move(tau)};
    }
    return std::nullopt;
}

std::optional<KuroshStep> kurosh_reduce_step(const NaEndo& phi, int degree_limit) {
    std::vector<int> all;
    for (int i = 0; i < phi.ctx->size(); ++i) all.push_back(i);
    return kurosh_reduce_step(phi, all, degree_limit);
}

namespace {

NaEndo single_image_endo(const Ctx& ctx, int slot, NaPoly image) {
    NaEndo e = NaEndo::identity(ctx);
    e.images[static_cast<size_t>(slot)] = std::move(image);
    return e;
}

} // namespace

NaDecomposition z_tame_decompose(const NaEndo& phi0, const std::vector<int>& z_vars,
                                 int degree_limit) {
    const Ctx& ctx = phi0.ctx;
    int n_total = ctx->size();
    for (int z : z_vars)
        if (!phi0.fixes(z)) raise(Errc::BadInput, "endomorphism does not fix " + ctx->names[z]);
    std::vector<int> x_vars;
    for (int i = 0; i < n_total; ++i)
        if (std::find(z_vars.begin(), z_vars.end(), i) == z_vars.end()) x_vars.push_back(i);

    NaDecomposition out;
    auto essential_check = [&](const NaEndo& phi) -> bool {
        for (int i : x_vars)
            if (!phi.image(i).depends_on_any(x_vars)) {
                out.failure = "the image of " + ctx->names[i] +
                              " does not depend on the non-fixed variables; not an automorphism";
                return false;
            }
        return true;
    };

    NaEndo phi = phi0;
    if (!essential_check(phi)) return out;

    std::vector<NaEndo> inverse_tail;  // tau_k^-1 ... tau_1^-1, collected in reverse
    while (phi.degree() > n_total) {
        auto step = kurosh_reduce_step(phi, x_vars, degree_limit);
        if (!step) {
            std::ostringstream msg;
            msg << "no coordinate reduces: the leading forms of";
            for (int i : x_vars) msg << " " << ctx->names[i] << " -> (" << leading_form(phi.image(i)).str() << ")";
            msg << " are mutually inexpressible";
            out.failure = msg.str();
            return out;
        }
        int old_degree = phi.degree();
        NaEndo next = phi.compose(step->tau);
        // tau = (x_i - g)  =>  tau^-1 = (x_i + g)
        NaPoly g = NaPoly::var(ctx, step->index) - step->tau.image(step->index);
        inverse_tail.push_back(single_image_endo(ctx, step->index, NaPoly::var(ctx, step->index) + g));
        if (!essential_check(next)) return out;
        if (next.degree() >= old_degree)
            raise(Errc::Internal, "reduction step failed to lower the degree");
        phi = std::move(next);
    }

    // Affine case: every image has degree exactly 1.
    for (int i : x_vars)
        if (phi.image(i).degree() != 1) {
            out.failure = "affine stage reached with a constant image; not an automorphism";
            return out;
        }

    // Split off constants: psi = phi . tau0 with tau0 = (x_i - c_i).
    std::vector<NaEndo> translations;
    NaEndo psi = phi;
    for (int i : x_vars) {
        Rational c = phi.image(i).constant_term();
        if (c.is_zero()) continue;
        psi.images[static_cast<size_t>(i)] -= NaPoly::constant(ctx, c);
        translations.push_back(
            single_image_endo(ctx, i, NaPoly::var(ctx, i) + NaPoly::constant(ctx, c)));
    }

    // Linear stage: column-reduce the coefficient matrix to the identity by
    // elementary right factors.
    int n = static_cast<int>(x_vars.size());
    auto coeff = [&](const NaEndo& e, int row_var, int col) {
        NaPoly img = e.image(x_vars[static_cast<size_t>(col)]);
        auto it = img.terms().find(NaWord::leaf(row_var));
        return it == img.terms().end() ? Rational(0) : it->second;
    };
    std::vector<NaEndo> ops;  // applied right factors, in application order
    auto apply_op = [&](NaEndo op) {
        psi = psi.compose(op);
        ops.push_back(std::move(op));
    };
    for (int d = 0; d < n; ++d) {
        int rv = x_vars[static_cast<size_t>(d)];
        if (coeff(psi, rv, d).is_zero()) {
            // Donor columns must be unprocessed ones: already-cleared rows
            // have zero entries there, so the invariant survives.
            int c = -1;
            for (int j = d + 1; j < n; ++j)
                if (!coeff(psi, rv, j).is_zero()) { c = j; break; }
            if (c < 0) {
                out.failure = "linear block is singular; not an automorphism";
                return out;
            }
            apply_op(single_image_endo(
                ctx, x_vars[static_cast<size_t>(d)],
                NaPoly::var(ctx, x_vars[static_cast<size_t>(d)]) +
                    NaPoly::var(ctx, x_vars[static_cast<size_t>(c)])));
        }
        Rational pivot = coeff(psi, rv, d);
        if (!pivot.is_one())
            apply_op(single_image_endo(ctx, x_vars[static_cast<size_t>(d)],
                                       NaPoly::var(ctx, x_vars[static_cast<size_t>(d)]).scaled(pivot.inverse())));
        for (int j = 0; j < n; ++j) {
            if (j == d) continue;
            Rational c = coeff(psi, rv, j);
            if (c.is_zero()) continue;
            apply_op(single_image_endo(
                ctx, x_vars[static_cast<size_t>(j)],
                NaPoly::var(ctx, x_vars[static_cast<size_t>(j)]) -
                    NaPoly::var(ctx, x_vars[static_cast<size_t>(d)]).scaled(c)));
        }
    }
    // Clear the Z-rows of each x-column.
    for (int j = 0; j < n; ++j) {
        NaPoly img = psi.image(x_vars[static_cast<size_t>(j)]);
        NaPoly zpart = img - NaPoly::var(ctx, x_vars[static_cast<size_t>(j)]);
        if (zpart.is_zero()) continue;
        apply_op(single_image_endo(ctx, x_vars[static_cast<size_t>(j)],
                                   NaPoly::var(ctx, x_vars[static_cast<size_t>(j)]) - zpart));
    }
    if (!(psi == NaEndo::identity(ctx)))
        raise(Errc::Internal, "linear elimination did not reach the identity");

    // phi0 = (ops reversed, inverted) . translations . inverse_tail
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        int slot = -1;
        for (int i : x_vars)
            if (!it->fixes(i)) { slot = i; break; }
        if (slot < 0) continue;
        NaPoly img = it->image(slot);
        NaPoly lin = img - NaPoly::var(ctx, slot);
        Rational self_coeff = img.terms().count(NaWord::leaf(slot))
                                  ? img.terms().at(NaWord::leaf(slot))
                                  : Rational(0);
        NaEndo inv = NaEndo::identity(ctx);
        if (lin.is_zero()) continue;
        if ((img - NaPoly::var(ctx, slot).scaled(self_coeff)).is_zero()) {
            // pure scaling
            inv.images[static_cast<size_t>(slot)] = NaPoly::var(ctx, slot).scaled(self_coeff.inverse());
        } else {
            // x_slot + w with w free of x_slot
            inv.images[static_cast<size_t>(slot)] = NaPoly::var(ctx, slot) - lin;
        }
        out.steps.push_back(std::move(inv));
    }
    for (auto it = translations.rbegin(); it != translations.rend(); ++it) out.steps.push_back(*it);
    for (auto it = inverse_tail.rbegin(); it != inverse_tail.rend(); ++it) out.steps.push_back(*it);

    NaEndo check = NaEndo::identity(ctx);
    for (const auto& s : out.steps) check = check.compose(s);
    if (!(check == phi0)) raise(Errc::Internal, "decomposition failed to recompose");
    out.ok = true;
    return out;
}

NcEndo na_endo_to_assoc(const NaEndo& e, const Ctx& target) {
    NcEndo r;
    r.ctx = target;
    for (const auto& img : e.images) r.images.push_back(img.flatten(target));
    return r;
}

LiftCheck lift_candidate_check(const NaEndo& psi, const std::vector<int>& z_vars,
                               int degree_limit) {
    NaDecomposition d = z_tame_decompose(psi, z_vars, degree_limit);
    LiftCheck out;
    if (!d.ok) {
        out.failure = d.failure;
        return out;
    }
    out.is_z_automorphism = true;
    Ctx assoc = make_ctx(psi.ctx->names);
    for (const auto& s : d.steps) out.assoc_steps.push_back(na_endo_to_assoc(s, assoc));
    out.steps = std::move(d.steps);
    return out;
}

} // namespace freeaut
