#pragma once

#include <map>
#include <string>
#include <vector>

#include "freeaut/context.hpp"
#include "freeaut/cpoly.hpp"
#include "freeaut/rational.hpp"

namespace freeaut {

// Associative word: a finite sequence of variable indices; the empty word
// is the multiplicative identity.
struct Word {
    std::vector<int> letters;

    int degree() const { return static_cast<int>(letters.size()); }
    int degree_in(const std::vector<int>& vars) const;

    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    // Degree-lexicographic: length first, then letter sequence.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

// Element of the free associative algebra over Q in a fixed context.
class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static NcPoly zero(Ctx ctx) { return NcPoly(std::move(ctx)); }
    static NcPoly one(Ctx ctx) { return constant(std::move(ctx), Rational(1)); }
    static NcPoly constant(Ctx ctx, const Rational& c);
    static NcPoly var(Ctx ctx, int index);
    static NcPoly monomial(Ctx ctx, Word w, const Rational& c);

    const Ctx& ctx() const { return ctx_; }
    const std::map<Word, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    Rational constant_term() const;
    Rational coeff(const Word& w) const;

    void add_term(const Word& w, const Rational& c);

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    NcPoly scaled(const Rational& c) const;

    friend bool operator==(const NcPoly& a, const NcPoly& b);
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    // Terms whose degree counted in `vars` equals d (all variables when
    // `vars` is empty and total==true).
    NcPoly homogeneous_component(int d) const;
    NcPoly homogeneous_component_in(int d, const std::vector<int>& vars) const;

    // Image under the algebra-endomorphism extension of var -> images[var].
    // Images live in a common target context; every variable occurring in
    // this polynomial must have an image.
    NcPoly substitute(const std::map<int, NcPoly>& images) const;

    // Natural homomorphism onto the commutative polynomial algebra with the
    // same variable names.
    CPoly abelianize() const;
    CPoly abelianize(const Ctx& cctx) const;

    std::string str() const;

private:
    Ctx ctx_;
    std::map<Word, Rational> terms_;
};

inline NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

// Endomorphism of the free algebra, one image per context variable.
struct NcEndo {
    Ctx ctx;
    std::vector<NcPoly> images;

    static NcEndo identity(Ctx c);

    const NcPoly& image(int i) const { return images[static_cast<size_t>(i)]; }
    NcPoly apply(const NcPoly& f) const;

    // (a.compose(b))(u) = a(b(u))
    NcEndo compose(const NcEndo& other) const;

    bool fixes(int var) const;

    friend bool operator==(const NcEndo& a, const NcEndo& b) {
        return same_ctx(a.ctx, b.ctx) && a.images == b.images;
    }

    std::string str() const;
};

// Structural decomposition of a polynomial of K<x,y,z> that is linear in
// x,y: f = sum a_pq z^p x z^q + sum b_pq z^p y z^q + tail(z), with a, b
// collected as polynomials in the commutative pair (z1, z2).
struct XYLinearForm {
    CPoly a;      // over (z1, z2)
    CPoly b;      // over (z1, z2)
    NcPoly tail;  // z-only part
};

// Context helpers for the rank-3 algebra and its commutative companions.
Ctx xyz_ctx();
Ctx z1z2_ctx();

XYLinearForm xy_linear_decompose(const NcPoly& f);

// Rebuilds sum a_pq z^p x z^q + sum b_pq z^p y z^q + tail.
NcPoly xy_linear_rebuild(const XYLinearForm& form, const Ctx& actx);

// sum q_pq z^p * w * z^q for q over (z1,z2); the building block of
// xy-linear endomorphisms.
NcPoly apply_z_pair(const CPoly& q, const NcPoly& w);

} // namespace freeaut
