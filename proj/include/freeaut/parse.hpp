#pragma once

#include <string>
#include <vector>

#include "freeaut/cpoly.hpp"
#include "freeaut/natree.hpp"
#include "freeaut/ncpoly.hpp"

namespace freeaut {

// Shared grammar: explicit '*', integer powers '^k', commutator sugar
// '[f,g]' (associative and nonassociative modes), rational literals 'p/q',
// parentheses. Juxtaposition is never multiplication. Nonassociative mode
// requires explicit bracketing: 'x*(y*z)', and only '^0..^2' are
// unambiguous.
NcPoly parse_ncpoly(const std::string& text, const Ctx& ctx);
CPoly parse_cpoly(const std::string& text, const Ctx& ctx);
NaPoly parse_napoly(const std::string& text, const Ctx& ctx);

// Endomorphism literal: images separated by ';', one per context variable.
NcEndo parse_nc_endo(const std::string& text, const Ctx& ctx);
NaEndo parse_na_endo(const std::string& text, const Ctx& ctx);

// Matrix literal [[p,p],[p,p]] with commutative entries.
CMatrix parse_cmatrix(const std::string& text, const Ctx& ctx);

} // namespace freeaut
