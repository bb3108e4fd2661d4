#pragma once

#include "chpos/spaces.hpp"

#include <string>
#include <string_view>

namespace chpos {

/// Parses the space grammar, e.g. "PB(CI(P(4); 2); O(-1), O(0))".
/// Throws ParseError with line and column.
SpaceSpec parse_spec(std::string_view text);

/// Canonical text; parse_spec(render(s)) == s.
std::string render(const SpaceSpec& spec);

}  // namespace chpos
