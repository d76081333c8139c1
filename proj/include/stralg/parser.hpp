#pragma once

#include <string>
#include <string_view>

#include "stralg/quiver.hpp"

namespace stralg {

// Line-oriented DSL, '#' starts a comment:
//   vertices <id> <id> ...
//   arrow <name>: <src> -> <dst>
//   rel <arrow>[.<arrow>]*            monomial generator, left-to-right
//   rel <path> = <path>               binomial (parallel paths)
Presentation parse_presentation(std::string_view text);

std::string emit_dsl(const Presentation& pres);

}  // namespace stralg
