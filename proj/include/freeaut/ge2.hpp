#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeaut/cpoly.hpp"

namespace freeaut {

// Generators of GE_2(K[Z]): E12(q) = [[1,q],[0,1]], E21(q) = [[1,0],[q,1]],
// Diag(alpha,beta) with nonzero constants.
enum class StepKind { E12, E21, Diag };

struct ElemStep {
    StepKind kind;
    CPoly q;                       // for E12/E21
    Rational alpha, beta;          // for Diag

    static ElemStep e12(CPoly q) { return ElemStep{StepKind::E12, std::move(q), Rational(1), Rational(1)}; }
    static ElemStep e21(CPoly q) { return ElemStep{StepKind::E21, std::move(q), Rational(1), Rational(1)}; }
    static ElemStep diag(const Ctx& ctx, Rational a, Rational b);

    bool is_identity() const;
    ElemStep inverse() const;
    CMatrix matrix(const Ctx& ctx) const;
};

// Ordered list of elementary steps whose left-to-right product equals target.
struct Certificate {
    std::vector<ElemStep> steps;
    CMatrix target;
};

CMatrix recompose(const std::vector<ElemStep>& steps, const Ctx& ctx);
inline CMatrix recompose(const Certificate& cert) { return recompose(cert.steps, cert.target.ctx()); }
bool certificate_valid(const Certificate& cert);

enum class StuckReason { NeitherLeadingDivides, ZeroPartner };

struct StuckWitness {
    CPoly a, b;
    StuckReason reason;
    std::string describe() const;
};

// Re-check that no Euclidean step applies to the witness pair.
bool witness_stuck(const StuckWitness& w);

struct EuclidOutcome {
    bool reduced = false;
    Rational unit;                  // the final (alpha, 0) value when reduced
    std::vector<ElemStep> applied;  // row steps, in application order
    std::optional<StuckWitness> witness;
};

// Euclidean reduction of a column pair (a, b) != (0, 0): repeatedly cancels
// one leading form against the other until (alpha, 0) or no step applies.
EuclidOutcome euclid_reduce_pair(const CPoly& a, const CPoly& b);

struct Ge2Result {
    bool member = false;
    Certificate cert;                   // when member
    std::optional<StuckWitness> witness;
};

// Decides membership of an invertible 2x2 matrix in GE_2(K[Z]); the matrix
// must have a nonzero constant determinant.
Ge2Result ge2_membership(const CMatrix& m);

struct CompleteResult {
    bool completed = false;
    CPoly c, d;                         // second column when completed
    Certificate cert;                   // for [[a,c],[b,d]]
    std::optional<StuckWitness> witness;
};

// Completes a column (a, b) to a GE_2 matrix, or certifies that no such
// completion exists.
CompleteResult complete_to_ge2(const CPoly& a, const CPoly& b);

} // namespace freeaut
