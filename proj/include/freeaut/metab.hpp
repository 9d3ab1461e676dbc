#pragma once

#include <string>
#include <vector>

#include "freeaut/autom.hpp"
#include "freeaut/deriv.hpp"

namespace freeaut {

// Jacobian matrix over K[U,V] of an endomorphism viewed in the free
// metabelian quotient; entry (i, j) is the metabelian derivative of
// phi(x_j) by x_i.
CMatrix jm(const NcEndo& phi);

// An endomorphism together with its metabelian Jacobian; jm depends only on
// the image in the metabelian quotient.
struct MetabEndoView {
    NcEndo source;
    CMatrix jm;
};

MetabEndoView metab_view(const NcEndo& phi);

// True iff det(jm(phi)) is a nonzero constant.
bool is_metab_automorphism(const NcEndo& phi);

// Membership of f (via its representative) in the commutator ideal of the
// metabelian quotient: sum (u_i - v_i) d_M f / d_M x_i == 0 together with a
// vanishing constant term.
bool commutator_ideal_member(const NcPoly& f);
CPoly commutator_ideal_residual(const NcPoly& f);

// For phi inducing the identity on the commutative quotient: the 2x2 top
// block of jm(phi) specialized at x1=y1=x2=y2=0, entries over (z1,z2).
CMatrix j2_bar(const NcEndo& phi);

// Wildness evidence for such phi: a non-GE2 j2_bar makes the x and y
// coordinates wild; membership alone is only a necessary condition, so the
// answer is Inconclusive in that direction.
Verdict umirbaev_wildness_evidence(const NcEndo& phi);

// Canonical representative modulo cyclic permutation of words: every word
// is replaced by its lexicographically minimal rotation.
struct CyclicClass {
    NcPoly rep;
    bool is_zero() const { return rep.is_zero(); }
    friend bool operator==(const CyclicClass& a, const CyclicClass& b) { return a.rep == b.rep; }
    friend bool operator!=(const CyclicClass& a, const CyclicClass& b) { return !(a == b); }
};

CyclicClass cyclic_class(const NcPoly& f);

enum class TraceVerdict { Pass, Fail, NotApplicable };

struct TraceResult {
    TraceVerdict verdict = TraceVerdict::NotApplicable;
    int k = 0;                 // detected augmentation order
    CyclicClass residual;      // nonzero on Fail
    std::string note;
};

// Necessary condition for sigma = id mod aug^k (k >= 2) to be an
// automorphism: the degree-(k-1) component of the trace of the one-sided
// Fox Jacobian is cyclically equivalent to 0. Fail certifies sigma is not
// an automorphism.
TraceResult trace_test(const NcEndo& sigma, FoxSide side);

// The degree-4 lifting obstruction for (x + x^2[y,z], y, z): coefficient
// vectors of the two trace constraints over the six commutator-product
// basis polynomials, their offsets, and the joint solvability verdict.
struct ObstructionReport {
    std::vector<std::string> basis;     // printable basis polynomials
    std::vector<Rational> right_coeffs;
    Rational right_offset;
    std::vector<Rational> left_coeffs;
    Rational left_offset;
    bool consistent = true;
};

ObstructionReport tau_lift_obstruction();

} // namespace freeaut
