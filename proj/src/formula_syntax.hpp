#pragma once

#include "lpsucc/formula.hpp"
#include "syntax.hpp"

namespace lpsucc::detail {

/// Parses one formula expression starting at the stream position.
Formula parse_formula_expr(TokenStream& ts, const NameResolver& names);

} // namespace lpsucc::detail
