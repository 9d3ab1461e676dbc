#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freeaut/cpoly.hpp"
#include "freeaut/ncpoly.hpp"

namespace freeaut {

// Element of K<X> (x) K<X>^op, stored as a rational coefficient map on word
// pairs (prefix, suffix).
class TensorPoly {
public:
    TensorPoly() = default;
    explicit TensorPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static TensorPoly zero(Ctx ctx) { return TensorPoly(std::move(ctx)); }
    static TensorPoly unit(Ctx ctx);  // 1 (x) 1

    const Ctx& ctx() const { return ctx_; }
    const std::map<std::pair<Word, Word>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& u, const Word& v, const Rational& c);

    TensorPoly& operator+=(const TensorPoly& o);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    TensorPoly scaled(const Rational& c) const;

    // Bimodule actions used by the Leibniz identity
    //   d(fg) = d(f) . (1 (x) g) + (f (x) 1) . d(g):
    // acting by (1 (x) g) extends every suffix by g on the right, acting by
    // (f (x) 1) extends every prefix by f on the left.
    TensorPoly act_suffix(const NcPoly& g) const;
    TensorPoly act_prefix(const NcPoly& f) const;

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return same_ctx(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    std::string str() const;

private:
    Ctx ctx_;
    std::map<std::pair<Word, Word>, Rational> terms_;
};

// Doubled commutative alphabet: variable i maps to u_i = <name>1 at slot i
// and v_i = <name>2 at slot n+i.
struct UVContext {
    Ctx base;
    Ctx uv;

    int u(int var) const { return var; }
    int v(int var) const { return base->size() + var; }
};

UVContext make_uv_context(const Ctx& base);

// Dicks-Lewin partial derivative, valued in K<X> (x) K<X>^op.
TensorPoly dicks_lewin(const NcPoly& f, int var);

// Commutative specialization sending u (x) v to u(U) * v(V).
CPoly tensor_to_uv(const TensorPoly& t, const UVContext& uvc);

// Metabelian partial derivative: the image of dicks_lewin under tensor_to_uv,
// computed directly from the word formula.
CPoly metab_derivative(const NcPoly& f, int var, const UVContext& uvc);

enum class FoxSide { Left, Right };

// Coefficients of the unique decompositions f = sum x_i f_i + c (right) and
// f = sum f_i x_i + c (left).
NcPoly fox_right(const NcPoly& f, int var);
NcPoly fox_left(const NcPoly& f, int var);
NcPoly fox(FoxSide side, const NcPoly& f, int var);

// Jacobian matrices; entry (i, j) is the derivative of phi(x_j) by x_i.
std::vector<std::vector<TensorPoly>> jacobian_dl(const NcEndo& phi);
std::vector<std::vector<NcPoly>> jacobian_fox(const NcEndo& phi, FoxSide side);

} // namespace freeaut
