#include "freeaut/cpoly.hpp"

#include <sstream>

#include "freeaut/linsolve.hpp"

namespace freeaut {

CPoly CPoly::constant(Ctx ctx, const Rational& c) {
    CPoly p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(Expo{std::vector<int>(p.ctx_->size(), 0)}, c);
    return p;
}

CPoly CPoly::var(Ctx ctx, int index) {
    CPoly p(std::move(ctx));
    if (index < 0 || index >= p.ctx_->size()) raise(Errc::BadInput, "variable index out of range");
    Expo m{std::vector<int>(p.ctx_->size(), 0)};
    m.e[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

CPoly CPoly::monomial(Ctx ctx, Expo m, const Rational& c) {
    CPoly p(std::move(ctx));
    if (static_cast<int>(m.e.size()) != p.ctx_->size()) raise(Errc::BadInput, "exponent arity mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool CPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.total() == 0;
}

Rational CPoly::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) raise(Errc::BadInput, "polynomial is not constant");
    return terms_.begin()->second;
}

Rational CPoly::constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto& first = *terms_.begin();
    return first.first.total() == 0 ? first.second : Rational(0);
}

int CPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

bool CPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.total() == terms_.rbegin()->first.total();
}

void CPoly::add_term(const Expo& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CPoly CPoly::operator-() const {
    CPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    require_same_ctx(a.ctx_, b.ctx_);
    CPoly r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Expo m = ma;
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

CPoly CPoly::scaled(const Rational& c) const {
    CPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

bool operator==(const CPoly& a, const CPoly& b) {
    return same_ctx(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

CPoly CPoly::homogeneous_component(int d) const {
    CPoly r(ctx_);
    for (const auto& [m, c] : terms_)
        if (m.total() == d) r.terms_.emplace(m, c);
    return r;
}

CPoly CPoly::at_zero(const std::vector<int>& vars) const {
    CPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int v : vars)
            if (m.e[v] != 0) { keep = false; break; }
        if (keep) r.terms_.emplace(m, c);
    }
    return r;
}

CPoly CPoly::project(const Ctx& to, const std::vector<int>& varmap) const {
    CPoly r(to);
    for (const auto& [m, c] : terms_) {
        Expo t{std::vector<int>(to->size(), 0)};
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (varmap[i] < 0) raise(Errc::BadInput, "projection drops an occurring variable");
            t.e[varmap[i]] += m.e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::string CPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest degree first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool trivial_monomial = m.total() == 0;
        if (!a.is_one() || trivial_monomial) {
            out << a.str();
            if (!trivial_monomial) out << "*";
        }
        bool started = false;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (started) out << "*";
            started = true;
            out << ctx_->names[i];
            if (m.e[i] > 1) out << "^" << m.e[i];
        }
    }
    return out.str();
}

CPoly leading_form(const CPoly& p) {
    if (p.is_zero()) raise(Errc::ZeroInput, "leading form of the zero polynomial");
    return p.homogeneous_component(p.degree());
}

std::vector<Expo> monomials_of_degree(int nvars, int d) {
    std::vector<Expo> out;
    Expo cur{std::vector<int>(nvars, 0)};
    // lexicographic enumeration by recursion on variable slots
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == nvars - 1) {
            cur.e[slot] = rest;
            out.push_back(cur);
            cur.e[slot] = 0;
            return;
        }
        for (int k = rest; k >= 0; --k) {
            cur.e[slot] = k;
            self(self, slot + 1, rest - k);
        }
        cur.e[slot] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::optional<CPoly> exact_divide_homogeneous(const CPoly& n, const CPoly& d) {
    if (d.is_zero()) raise(Errc::ZeroInput, "division by the zero polynomial");
    if (!n.is_homogeneous() || !d.is_homogeneous())
        raise(Errc::NonHomogeneous, "exact_divide_homogeneous requires homogeneous operands");
    require_same_ctx(n.ctx(), d.ctx());
    if (n.is_zero()) return CPoly::zero(n.ctx());
    int dn = n.degree(), dd = d.degree();
    if (dn < dd) return std::nullopt;

    auto basis = monomials_of_degree(n.ctx()->size(), dn - dd);
    SpanSolver<Expo> solver;
    for (const auto& m : basis) {
        CPoly dm = d * CPoly::monomial(n.ctx(), m, Rational(1));
        solver.add(dm.terms());
    }
    auto sol = solver.solve(n.terms());
    if (!sol) return std::nullopt;
    CPoly q(n.ctx());
    for (size_t i = 0; i < basis.size(); ++i) q.add_term(basis[i], (*sol)[i]);
    return q;
}

CMatrix::CMatrix(Ctx ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, CPoly(ctx_)) {}

CMatrix CMatrix::identity(Ctx ctx, int n) {
    CMatrix m(std::move(ctx), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CPoly::constant(m.ctx_, Rational(1));
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    require_same_ctx(a.ctx_, b.ctx_);
    if (a.cols_ != b.rows_) raise(Errc::BadInput, "matrix dimension mismatch");
    CMatrix r(a.ctx_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            CPoly s(a.ctx_);
            for (int k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    if (!same_ctx(a.ctx_, b.ctx_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.entries_ == b.entries_;
}

CPoly CMatrix::det() const {
    if (rows_ != cols_) raise(Errc::BadInput, "determinant of a non-square matrix");
    if (rows_ == 0) return CPoly::constant(ctx_, Rational(1));
    if (rows_ == 1) return at(0, 0);
    if (rows_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    CPoly s(ctx_);
    for (int j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        CMatrix minor(ctx_, rows_ - 1, cols_ - 1);
        for (int i = 1; i < rows_; ++i) {
            int cc = 0;
            for (int c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = at(i, c);
            }
        }
        CPoly term = at(0, j) * minor.det();
        if (j % 2 == 0) s += term; else s -= term;
    }
    return s;
}

CMatrix CMatrix::inverse_2x2_unit_det() const {
    if (rows_ != 2 || cols_ != 2) raise(Errc::BadInput, "inverse_2x2 needs a 2x2 matrix");
    CPoly dd = det();
    if (!dd.is_unit()) raise(Errc::NotInvertible, "determinant is not a nonzero constant");
    Rational inv = dd.constant_value().inverse();
    CMatrix r(ctx_, 2, 2);
    r.at(0, 0) = at(1, 1).scaled(inv);
    r.at(0, 1) = (-at(0, 1)).scaled(inv);
    r.at(1, 0) = (-at(1, 0)).scaled(inv);
    r.at(1, 1) = at(0, 0).scaled(inv);
    return r;
}

std::string CMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

} // namespace freeaut
