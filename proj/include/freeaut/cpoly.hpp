#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "freeaut/context.hpp"
#include "freeaut/rational.hpp"

namespace freeaut {

// Commutative exponent vector, one slot per context variable.
struct Expo {
    std::vector<int> e;

    int total() const {
        int t = 0;
        for (int x : e) t += x;
        return t;
    }

    // Degree-lexicographic: total degree first, then exponent vectors.
    friend bool operator<(const Expo& a, const Expo& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;
    }
    friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
};

// Exact multivariate polynomial over Q in a fixed commutative context.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static CPoly zero(Ctx ctx) { return CPoly(std::move(ctx)); }
    static CPoly constant(Ctx ctx, const Rational& c);
    static CPoly var(Ctx ctx, int index);
    static CPoly monomial(Ctx ctx, Expo m, const Rational& c);

    const Ctx& ctx() const { return ctx_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_unit() const { return is_constant() && !is_zero(); }
    Rational constant_value() const;   // requires is_constant()
    Rational constant_term() const;
    int degree() const;                // -1 for the zero polynomial
    bool is_homogeneous() const;

    void add_term(const Expo& m, const Rational& c);

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly scaled(const Rational& c) const;

    friend bool operator==(const CPoly& a, const CPoly& b);
    friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

    // Sum of terms of the given total degree.
    CPoly homogeneous_component(int d) const;

    // Sets the listed variables to zero.
    CPoly at_zero(const std::vector<int>& vars) const;

    // Renames variables into another context; every variable occurring must
    // be mapped (varmap[i] = index in `to`, or -1 when unused).
    CPoly project(const Ctx& to, const std::vector<int>& varmap) const;

    std::string str() const;

private:
    Ctx ctx_;
    std::map<Expo, Rational> terms_;
};

// Homogeneous component of maximal total degree (error on zero input).
CPoly leading_form(const CPoly& p);

// Exact quotient n / d for homogeneous n, d (d != 0); solves the linear
// system on the degree-(deg n - deg d) monomial basis. Returns nothing when
// no exact quotient exists.
std::optional<CPoly> exact_divide_homogeneous(const CPoly& n, const CPoly& d);

// All exponent vectors of total degree d over nvars variables.
std::vector<Expo> monomials_of_degree(int nvars, int d);

// Dense row-major grid of CPoly entries sharing one context.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(Ctx ctx, int rows, int cols);
    static CMatrix identity(Ctx ctx, int n);

    const Ctx& ctx() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const CPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix& a, const CMatrix& b);
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    CPoly det() const;  // square matrices, cofactor expansion

    // Inverse of a 2x2 matrix whose determinant is a nonzero constant.
    CMatrix inverse_2x2_unit_det() const;

    std::string str() const;

private:
    Ctx ctx_;
    int rows_ = 0, cols_ = 0;
    std::vector<CPoly> entries_;
};

} // namespace freeaut
