#pragma once

#include "jetcm/expr.hpp"

#include <map>
#include <variant>

namespace jetcm {

/// Result of numeric evaluation: exact while every operation stays rational,
/// an IEEE double (roughly 1e-15 relative precision) once a fractional power
/// or logarithm forces an inexact step.
using NumericValue = std::variant<Rational, double>;

bool numeric_is_exact(const NumericValue& v);
double numeric_to_double(const NumericValue& v);
std::string numeric_str(const NumericValue& v);

/// Evaluates e at the given point.  All atoms of e must be assigned; bases of
/// fractional powers and log arguments must evaluate positive.
/// Throws DomainError / DivisionByZero accordingly.
NumericValue eval_numeric(const Expr& e, const std::map<Atom, Rational>& assignment);

} // namespace jetcm
