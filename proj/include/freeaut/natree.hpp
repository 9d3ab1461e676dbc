#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freeaut/context.hpp"
#include "freeaut/ncpoly.hpp"
#include "freeaut/rational.hpp"

namespace freeaut {

// Nonassociative word: a full binary product tree with variable leaves;
// (xx)x and x(xx) are distinct.
class NaWord {
public:
    static NaWord leaf(int var);
    static NaWord prod(const NaWord& l, const NaWord& r);

    int degree() const { return node_->deg; }
    bool is_leaf() const { return node_->var >= 0; }
    int var() const { return node_->var; }
    NaWord left() const { return NaWord(node_->l); }
    NaWord right() const { return NaWord(node_->r); }

    // Total order: degree, then structure, then leaves.
    friend bool operator<(const NaWord& a, const NaWord& b) { return cmp(a.node_.get(), b.node_.get()) < 0; }
    friend bool operator==(const NaWord& a, const NaWord& b) { return cmp(a.node_.get(), b.node_.get()) == 0; }

    // In-order leaf sequence (the image in the associative algebra).
    Word flatten() const;

    bool contains_any(const std::vector<int>& vars) const;

private:
    struct Node {
        int var = -1;  // >= 0 for leaves
        std::shared_ptr<const Node> l, r;
        int deg = 1;
    };
    explicit NaWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static int cmp(const Node* a, const Node* b);
    std::shared_ptr<const Node> node_;
};

// Element of the absolutely free algebra K{X} with an adjoined constant
// term (needed for translations in the affine case).
class NaPoly {
public:
    NaPoly() = default;
    explicit NaPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static NaPoly zero(Ctx ctx) { return NaPoly(std::move(ctx)); }
    static NaPoly constant(Ctx ctx, const Rational& c);
    static NaPoly var(Ctx ctx, int index);

    const Ctx& ctx() const { return ctx_; }
    const std::map<NaWord, Rational>& terms() const { return terms_; }
    const Rational& constant_term() const { return constant_; }

    bool is_zero() const { return constant_.is_zero() && terms_.empty(); }
    int degree() const;  // -1 for zero, 0 for nonzero constants

    void add_term(const NaWord& w, const Rational& c);
    void add_constant(const Rational& c) { constant_ += c; }

    NcPoly flatten(const Ctx& target) const;

    NaPoly operator-() const;
    NaPoly& operator+=(const NaPoly& o);
    NaPoly& operator-=(const NaPoly& o);
    friend NaPoly operator+(NaPoly a, const NaPoly& b) { return a += b; }
    friend NaPoly operator-(NaPoly a, const NaPoly& b) { return a -= b; }
    friend NaPoly operator*(const NaPoly& a, const NaPoly& b);
    NaPoly scaled(const Rational& c) const;

    friend bool operator==(const NaPoly& a, const NaPoly& b);
    friend bool operator!=(const NaPoly& a, const NaPoly& b) { return !(a == b); }

    NaPoly homogeneous_component(int d) const;
    NaPoly substitute(const std::map<int, NaPoly>& images) const;

    bool depends_on_any(const std::vector<int>& vars) const;

    std::string str() const;

private:
    Ctx ctx_;
    Rational constant_;
    std::map<NaWord, Rational> terms_;
};

NaPoly leading_form(const NaPoly& f);

struct NaEndo {
    Ctx ctx;
    std::vector<NaPoly> images;

    static NaEndo identity(Ctx c);
    const NaPoly& image(int i) const { return images[static_cast<size_t>(i)]; }
    NaPoly apply(const NaPoly& f) const;
    NaEndo compose(const NaEndo& other) const;
    bool fixes(int var) const;
    int degree() const;  // sum of image degrees

    friend bool operator==(const NaEndo& a, const NaEndo& b) {
        return same_ctx(a.ctx, b.ctx) && a.images == b.images;
    }

    std::string str() const;
};

// Formal bracketing of generator slots with rational weights; evaluation is
// a homomorphism in each slot.
class NaExpression {
public:
    struct Tree {
        int gen = -1;  // >= 0 for generator leaves
        std::shared_ptr<const Tree> l, r;
        int deg = 0;   // value degree given the generator degrees
    };
    using TreePtr = std::shared_ptr<const Tree>;

    std::vector<std::pair<Rational, TreePtr>> terms;

    NaPoly evaluate(const std::vector<NaPoly>& gens, const Ctx& ctx) const;
    std::string str(const std::vector<std::string>& gen_names) const;
};

inline constexpr int kDefaultMembershipDegreeLimit = 8;

// Expresses homogeneous g as a polynomial in homogeneous generators of
// degree >= 1 by exact linear algebra over the bracketing enumeration.
std::optional<NaExpression> subalgebra_express_homogeneous(
    const NaPoly& g, const std::vector<NaPoly>& gens,
    int degree_limit = kDefaultMembershipDegreeLimit);

struct KuroshStep {
    int index;            // reduced coordinate
    NaExpression expr;    // leading form of that coordinate in the others
    NaEndo tau;           // elementary x_i -> x_i - expr(other coordinates)
};

// One degree-reduction step: finds a coordinate whose leading form lies in
// the subalgebra generated by the other leading forms, so that composing
// with tau strictly lowers the total degree. Returns nothing when no
// coordinate reduces, which certifies the endomorphism is not an
// automorphism.
std::optional<KuroshStep> kurosh_reduce_step(
    const NaEndo& phi, const std::vector<int>& candidate_slots,
    int degree_limit = kDefaultMembershipDegreeLimit);
std::optional<KuroshStep> kurosh_reduce_step(const NaEndo& phi,
                                             int degree_limit = kDefaultMembershipDegreeLimit);

struct NaDecomposition {
    bool ok = false;
    std::vector<NaEndo> steps;   // Z-elementary factors, composed left-to-right
    std::string failure;         // certificate text when not an automorphism
};

// Full Z-tame decomposition of an endomorphism fixing the listed variables:
// iterated Kurosh reduction down to the affine case, then exact elimination
// of the linear block into elementary factors.
NaDecomposition z_tame_decompose(const NaEndo& phi, const std::vector<int>& z_vars,
                                 int degree_limit = kDefaultMembershipDegreeLimit);

struct LiftCheck {
    bool is_z_automorphism = false;
    std::vector<NaEndo> steps;
    std::vector<NcEndo> assoc_steps;  // images of the steps in K<X,Z>
    std::string failure;
};

// Either certifies that psi is a Z-automorphism (hence Z-tame) together
// with the induced associative Z-tame factorization, or certifies that it
// is not an automorphism.
LiftCheck lift_candidate_check(const NaEndo& psi, const std::vector<int>& z_vars,
                               int degree_limit = kDefaultMembershipDegreeLimit);

NcEndo na_endo_to_assoc(const NaEndo& e, const Ctx& target);

} // namespace freeaut
