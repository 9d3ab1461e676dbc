#include "freeaut/deriv.hpp"

#include <sstream>

namespace freeaut {

TensorPoly TensorPoly::unit(Ctx ctx) {
    TensorPoly t(std::move(ctx));
    t.terms_.emplace(std::make_pair(Word{}, Word{}), Rational(1));
    return t;
}

void TensorPoly::add_term(const Word& u, const Word& v, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, v);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [uv, c] : o.terms_) add_term(uv.first, uv.second, c);
    return *this;
}

TensorPoly TensorPoly::scaled(const Rational& c) const {
    TensorPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [uv, a] : terms_) r.terms_.emplace(uv, a * c);
    return r;
}

TensorPoly TensorPoly::act_suffix(const NcPoly& g) const {
    require_same_ctx(ctx_, g.ctx());
    TensorPoly r(ctx_);
    for (const auto& [uv, a] : terms_)
        for (const auto& [w, b] : g.terms()) r.add_term(uv.first, uv.second * w, a * b);
    return r;
}

TensorPoly TensorPoly::act_prefix(const NcPoly& f) const {
    require_same_ctx(ctx_, f.ctx());
    TensorPoly r(ctx_);
    for (const auto& [uv, a] : terms_)
        for (const auto& [w, b] : f.terms()) r.add_term(w * uv.first, uv.second, a * b);
    return r;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    auto word_str = [&](const Word& w) {
        return NcPoly::monomial(ctx_, w, Rational(1)).str();
    };
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [uv, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (!a.is_one()) out << a.str() << "*";
        out << word_str(uv.first) << "(x)" << word_str(uv.second);
    }
    return out.str();
}

UVContext make_uv_context(const Ctx& base) {
    std::vector<std::string> names;
    for (const auto& n : base->names) names.push_back(n + "1");
    for (const auto& n : base->names) names.push_back(n + "2");
    return UVContext{base, make_ctx(std::move(names))};
}

TensorPoly dicks_lewin(const NcPoly& f, int var) {
    TensorPoly t(f.ctx());
    for (const auto& [w, c] : f.terms()) {
        for (size_t k = 0; k < w.letters.size(); ++k) {
            if (w.letters[k] != var) continue;
            Word u{std::vector<int>(w.letters.begin(), w.letters.begin() + k)};
            Word v{std::vector<int>(w.letters.begin() + k + 1, w.letters.end())};
            t.add_term(u, v, c);
        }
    }
    return t;
}

CPoly tensor_to_uv(const TensorPoly& t, const UVContext& uvc) {
    CPoly r(uvc.uv);
    for (const auto& [uv, c] : t.terms()) {
        Expo m{std::vector<int>(uvc.uv->size(), 0)};
        for (int l : uv.first.letters) ++m.e[uvc.u(l)];
        for (int l : uv.second.letters) ++m.e[uvc.v(l)];
        r.add_term(m, c);
    }
    return r;
}

CPoly metab_derivative(const NcPoly& f, int var, const UVContext& uvc) {
    CPoly r(uvc.uv);
    for (const auto& [w, c] : f.terms()) {
        for (size_t k = 0; k < w.letters.size(); ++k) {
            if (w.letters[k] != var) continue;
            Expo m{std::vector<int>(uvc.uv->size(), 0)};
            for (size_t i = 0; i < k; ++i) ++m.e[uvc.u(w.letters[i])];
            for (size_t i = k + 1; i < w.letters.size(); ++i) ++m.e[uvc.v(w.letters[i])];
            r.add_term(m, c);
        }
    }
    return r;
}

NcPoly fox_right(const NcPoly& f, int var) {
    NcPoly r(f.ctx());
    for (const auto& [w, c] : f.terms()) {
        if (w.letters.empty() || w.letters.front() != var) continue;
        r.add_term(Word{std::vector<int>(w.letters.begin() + 1, w.letters.end())}, c);
    }
    return r;
}

NcPoly fox_left(const NcPoly& f, int var) {
    NcPoly r(f.ctx());
    for (const auto& [w, c] : f.terms()) {
        if (w.letters.empty() || w.letters.back() != var) continue;
        r.add_term(Word{std::vector<int>(w.letters.begin(), w.letters.end() - 1)}, c);
    }
    return r;
}

NcPoly fox(FoxSide side, const NcPoly& f, int var) {
    return side == FoxSide::Right ? fox_right(f, var) : fox_left(f, var);
}

std::vector<std::vector<TensorPoly>> jacobian_dl(const NcEndo& phi) {
    int n = phi.ctx->size();
    std::vector<std::vector<TensorPoly>> m(n, std::vector<TensorPoly>(n, TensorPoly(phi.ctx)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = dicks_lewin(phi.image(j), i);
    return m;
}

std::vector<std::vector<NcPoly>> jacobian_fox(const NcEndo& phi, FoxSide side) {
    int n = phi.ctx->size();
    std::vector<std::vector<NcPoly>> m(n, std::vector<NcPoly>(n, NcPoly(phi.ctx)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = fox(side, phi.image(j), i);
    return m;
}

} // namespace freeaut
