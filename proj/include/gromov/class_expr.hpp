#pragma once

#include <string>
#include <string_view>

#include "gromov/lattice.hpp"

namespace gromov {

/// Parses a signed integer combination of basis symbols such as
/// "3L - E1 - 2E2" or "-2 * A1 + A2". Whitespace is ignored, a missing
/// coefficient means 1, and the literal "0" denotes the zero class. The
/// Unicode minus sign is accepted in place of '-'.
///
/// Throws ParseError on an unknown symbol, a malformed integer or an empty
/// expression.
HClass parse_class(const LatticePtr &lattice, std::string_view expr);

/// Canonical text form, e.g. "3L - E1 - 2E2"; "0" for the zero class.
/// parse_class(format_class(a)) == a.
std::string format_class(const HClass &a);

} // namespace gromov
