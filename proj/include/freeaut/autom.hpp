#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeaut/ge2.hpp"
#include "freeaut/ncpoly.hpp"

namespace freeaut {

// Decision criteria carried by verdicts so reports are auditable.
inline constexpr const char* kCritLinearZFixingGe2 = "linear-z-fixing-ge2";
inline constexpr const char* kCritCoordinateLinearEuclid = "coordinate-linear-euclid";
inline constexpr const char* kCritCoordinateLinearPart = "coordinate-linear-part";
inline constexpr const char* kCritAutomorphismLinearPart = "automorphism-linear-part";
inline constexpr const char* kCritMetabelianJ2 = "metabelian-j2-ge2";

enum class VerdictKind { Tame, Wild, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::vector<NcEndo> steps;              // Tame: z-elementary factors, composed left-to-right
    std::optional<Certificate> certificate; // Tame: the GE_2 factorization behind the steps
    std::optional<StuckWitness> witness;    // Wild: the stuck pair
    std::string criterion;                  // Wild/Tame: which criterion decided
    std::string reason;                     // Inconclusive

    bool tame() const { return kind == VerdictKind::Tame; }
    bool wild() const { return kind == VerdictKind::Wild; }
    bool inconclusive() const { return kind == VerdictKind::Inconclusive; }

    static Verdict make_tame(std::vector<NcEndo> steps, std::optional<Certificate> cert,
                             std::string criterion);
    static Verdict make_wild(StuckWitness witness, std::string criterion);
    static Verdict make_inconclusive(std::string reason);
};

// z-fixing endomorphism whose x,y images are linear in x,y: the pure-linear
// part as a 2x2 matrix over (z1,z2) plus a z-only translation tail.
struct ZLinearAuto {
    CMatrix a;        // columns = images of x and y, rows = x/y coefficients
    NcPoly tail_x;    // z-only additive part of the x image
    NcPoly tail_y;
    Ctx actx;

    static ZLinearAuto from_endo(const NcEndo& rho);
    NcEndo to_endo() const;
};

CMatrix jz(const NcEndo& rho);
bool is_z_linear_automorphism(const NcEndo& rho);
ZLinearAuto invert_z_linear(const ZLinearAuto& rho);

// E21(q) -> (x + q(L,R) y, y, z), E12(q) -> (x, y + q(L,R) x, z),
// Diag(a,b) -> (a x, b y, z); satisfies jz(elementary_from_step(s)) == s.
NcEndo elementary_from_step(const ElemStep& s, const Ctx& actx);

// Tameness of a z-fixing, xy-linear automorphism inside the z-fixing class;
// Tame verdicts carry z-elementary steps recomposing to rho exactly.
Verdict decide_z_tame_linear(const NcEndo& rho);

// Tame/wild decision for an xy-linear candidate coordinate f. The caller
// asserts f is an automorphic image of x under some z-fixing automorphism.
Verdict decide_tame_coordinate_linear(const NcPoly& f);

// Wildness of a candidate coordinate f with f(0,0,z) = 0 via the linear
// part; Inconclusive when the sufficient condition does not apply.
Verdict decide_wild_coordinate(const NcPoly& f);

// Wildness of a z-fixing endomorphism (f, g, z) via linear parts of the
// composites with constant translations.
Verdict decide_wild_automorphism_zfixing(const NcEndo& rho);

// Named families.
NcEndo anick();
NcEndo anick_m(int m);
Ctx tz_ctx();
NcEndo sigma_h(const NcPoly& h);  // h over (t, z) with h(0,0) = 0

// Elementary automorphism (x_1, ..., alpha x_j + f, ..., x_n); f must not
// depend on x_j.
NcEndo elementary_endo(const Ctx& ctx, int j, const Rational& alpha, const NcPoly& f);

// Translation (x + p(z), y + q(z), z) with z-only polynomials.
NcEndo translation_endo(const Ctx& actx, const NcPoly& px, const NcPoly& py);

// When rho fixes every generator except x_j and rho(x_j) = alpha x_j + f
// with f free of x_j, returns (alpha, f).
std::optional<std::pair<Rational, NcPoly>> moved_coordinate_decomposition(const NcEndo& rho, int j);

NcEndo compose_all(const std::vector<NcEndo>& steps, const Ctx& ctx);

} // namespace freeaut
