#pragma once

#include <string>

#include "fusionkit/group.hpp"

namespace fusionkit
{

/**
 * Structure tag for a small group, from invariants and, where needed, an
 * explicit isomorphism to a reference group. Possible tags include "1",
 * "C<n>", "C2^<k>", "S3", "S4", "D8", "Q8", "Q16", "O48", "SL2(F3)",
 * "GL2(F3)", "Extraspecial(p^3,exp p)", the names of the 2x2 linear groups
 * over F_p, and "unknown(<order>)".
 */
std::string recognize(FiniteGroup const &g);

}  // namespace fusionkit
