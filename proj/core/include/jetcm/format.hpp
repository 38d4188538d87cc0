#pragma once

#include "jetcm/atom.hpp"
#include "jetcm/expr.hpp"

#include <string>

namespace jetcm {

std::string format_atom(const Atom& a, const JetContext& ctx);

/// Renders e in the expression language with minimal parentheses.  The output
/// re-parses (in the same context) to an expression equal to e.
std::string format_expr(const Expr& e, const JetContext& ctx);

} // namespace jetcm
