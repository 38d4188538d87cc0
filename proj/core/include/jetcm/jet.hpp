#pragma once

#include "jetcm/expr.hpp"

#include <map>

namespace jetcm {

/// Total derivative D_k: the derivation with D_k(x_i) = delta_ik,
/// D_k(u^j_alpha) = u^j_(alpha+1_k), D_k(parameter) = 0, and
/// D_k(f^(r)(x_i)) = f^(r+1)(x_i) when i == k.  The result is not
/// normalized; callers normalize when they need canonical output.
Expr total_derivative(const Expr& e, int k);

/// D_1^(alpha_1) ... D_n^(alpha_n) applied to e (the order is immaterial).
Expr total_derivative_multi(const Expr& e, const MultiIndex& alpha);

/// The jet of an explicit solution: maps every u^j_alpha with |alpha| <= order
/// to the alpha-derivative of closed_forms[j].  The closed forms may contain
/// only independent variables and parameters.
std::map<Atom, Expr> jet_of_solution(const std::vector<Expr>& closed_forms,
                                     int n_independents, int order);

} // namespace jetcm
