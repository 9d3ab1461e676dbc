#include "freeaut/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace freeaut {

int Word::degree_in(const std::vector<int>& vars) const {
    int n = 0;
    for (int l : letters)
        if (std::find(vars.begin(), vars.end(), l) != vars.end()) ++n;
    return n;
}

NcPoly NcPoly::constant(Ctx ctx, const Rational& c) {
    NcPoly p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(Word{}, c);
    return p;
}

NcPoly NcPoly::var(Ctx ctx, int index) {
    NcPoly p(std::move(ctx));
    if (index < 0 || index >= p.ctx_->size()) raise(Errc::BadInput, "variable index out of range");
    p.terms_.emplace(Word{{index}}, Rational(1));
    return p;
}

NcPoly NcPoly::monomial(Ctx ctx, Word w, const Rational& c) {
    NcPoly p(std::move(ctx));
    for (int l : w.letters)
        if (l < 0 || l >= p.ctx_->size()) raise(Errc::BadInput, "letter out of range");
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
}

Rational NcPoly::constant_term() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly r(ctx_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    require_same_ctx(a.ctx_, b.ctx_);
    NcPoly r(a.ctx_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NcPoly NcPoly::scaled(const Rational& c) const {
    NcPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
    return r;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
    return same_ctx(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

NcPoly NcPoly::homogeneous_component(int d) const {
    NcPoly r(ctx_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == d) r.terms_.emplace(w, c);
    return r;
}

NcPoly NcPoly::homogeneous_component_in(int d, const std::vector<int>& vars) const {
    NcPoly r(ctx_);
    for (const auto& [w, c] : terms_)
        if (w.degree_in(vars) == d) r.terms_.emplace(w, c);
    return r;
}

NcPoly NcPoly::substitute(const std::map<int, NcPoly>& images) const {
    Ctx target = ctx_;
    if (!images.empty()) target = images.begin()->second.ctx();
    for (const auto& [v, img] : images) {
        (void)v;
        require_same_ctx(target, img.ctx());
    }
    NcPoly r(target);
    for (const auto& [w, c] : terms_) {
        NcPoly prod = NcPoly::constant(target, c);
        for (int l : w.letters) {
            auto it = images.find(l);
            if (it == images.end())
                raise(Errc::MissingImage, "no image for variable " + ctx_->names[l]);
            prod = prod * it->second;
        }
        r += prod;
    }
    return r;
}

CPoly NcPoly::abelianize() const { return abelianize(make_ctx(ctx_->names)); }

CPoly NcPoly::abelianize(const Ctx& cctx) const {
    if (cctx->names != ctx_->names) raise(Errc::ContextMismatch, "abelianization context mismatch");
    CPoly r(cctx);
    for (const auto& [w, c] : terms_) {
        Expo m{std::vector<int>(cctx->size(), 0)};
        for (int l : w.letters) ++m.e[l];
        r.add_term(m, c);
    }
    return r;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (!a.is_one() || w.letters.empty()) {
            out << a.str();
            if (!w.letters.empty()) out << "*";
        }
        // run-length collapse: x*x*y -> x^2*y
        size_t i = 0;
        bool started = false;
        while (i < w.letters.size()) {
            size_t j = i;
            while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
            if (started) out << "*";
            started = true;
            out << ctx_->names[w.letters[i]];
            if (j - i > 1) out << "^" << (j - i);
            i = j;
        }
    }
    return out.str();
}

NcEndo NcEndo::identity(Ctx c) {
    NcEndo e;
    e.ctx = c;
    for (int i = 0; i < c->size(); ++i) e.images.push_back(NcPoly::var(c, i));
    return e;
}

NcPoly NcEndo::apply(const NcPoly& f) const {
    require_same_ctx(ctx, f.ctx());
    std::map<int, NcPoly> m;
    for (int i = 0; i < ctx->size(); ++i) m.emplace(i, images[i]);
    return f.substitute(m);
}

NcEndo NcEndo::compose(const NcEndo& other) const {
    require_same_ctx(ctx, other.ctx);
    NcEndo r;
    r.ctx = ctx;
    for (const auto& img : other.images) r.images.push_back(apply(img));
    return r;
}

bool NcEndo::fixes(int var) const { return images[static_cast<size_t>(var)] == NcPoly::var(ctx, var); }

std::string NcEndo::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < images.size(); ++i) out << (i ? " ; " : "") << images[i].str();
    return out.str();
}

Ctx xyz_ctx() { return make_ctx({"x", "y", "z"}); }
Ctx z1z2_ctx() { return make_ctx({"z1", "z2"}); }

XYLinearForm xy_linear_decompose(const NcPoly& f) {
    const Ctx& actx = f.ctx();
    int xi = actx->find("x"), yi = actx->find("y"), zi = actx->find("z");
    if (xi < 0 || yi < 0 || zi < 0)
        raise(Errc::NotXYLinear, "decomposition needs variables x, y, z in context");
    Ctx zz = z1z2_ctx();
    XYLinearForm form{CPoly::zero(zz), CPoly::zero(zz), NcPoly::zero(actx)};
    for (const auto& [w, c] : f.terms()) {
        int p = -1;   // position of the single x/y letter
        int which = -1;
        for (size_t k = 0; k < w.letters.size(); ++k) {
            int l = w.letters[k];
            if (l == xi || l == yi) {
                if (p >= 0)
                    raise(Errc::NotXYLinear, "monomial of degree >= 2 in {x,y}: " + f.str());
                p = static_cast<int>(k);
                which = l;
            } else if (l != zi) {
                raise(Errc::NotXYLinear, "variable outside {x,y,z}: " + actx->names[l]);
            }
        }
        if (p < 0) {
            form.tail.add_term(w, c);
        } else {
            Expo m{{p, static_cast<int>(w.letters.size()) - p - 1}};
            (which == xi ? form.a : form.b).add_term(m, c);
        }
    }
    return form;
}

NcPoly apply_z_pair(const CPoly& q, const NcPoly& w) {
    const Ctx& actx = w.ctx();
    int zi = actx->index_of("z");
    NcPoly z = NcPoly::var(actx, zi);
    NcPoly r(actx);
    for (const auto& [m, c] : q.terms()) {
        NcPoly left = NcPoly::one(actx);
        for (int k = 0; k < m.e[0]; ++k) left = left * z;
        NcPoly right = NcPoly::one(actx);
        for (int k = 0; k < m.e[1]; ++k) right = right * z;
        r += (left * w * right).scaled(c);
    }
    return r;
}

NcPoly xy_linear_rebuild(const XYLinearForm& form, const Ctx& actx) {
    NcPoly x = NcPoly::var(actx, actx->index_of("x"));
    NcPoly y = NcPoly::var(actx, actx->index_of("y"));
    NcPoly r = apply_z_pair(form.a, x) + apply_z_pair(form.b, y);
    r += form.tail;
    return r;
}

} // namespace freeaut
