#pragma once

#include "jetcm/ideal.hpp"
#include "jetcm/prolong.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetcm {

/// How identifiers resolve against a context.  Target systems are written
/// against mapping-declared primed coordinates, where omitting primes is
/// allowed as long as the stripped name is unambiguous (so "v[t',t']" can
/// reference the dependent declared by the mapping line "v' = ...").
enum class NameResolution { Exact, PrimeInsensitive };

/// Parses one expression.  `line` offsets error positions for callers reading
/// from a larger file.  Errors carry 1-based line/column.
Expr parse_expr(const std::string& text, const JetContext& ctx,
                NameResolution resolution = NameResolution::Exact, int line = 1);

/// A parametric mapping is given either by the three coordinate series or by
/// a Burgers h generator.
struct ParamMappingSpec {
    std::optional<Expr> xbar, ybar, ubar;
    std::optional<Expr> h;
};

struct Problem {
    JetContext context;                     // source coordinates
    std::vector<Equation> source_system;
    std::optional<JetContext> target_context;
    std::vector<Equation> target_system;    // written over the target context
    std::optional<Mapping> mapping;
    std::optional<ParamMappingSpec> param_mapping;
    std::vector<std::string> ansatz_functions;
    std::map<std::string, std::string> options;

    std::optional<int> option_int(const std::string& key) const;
    Ranking ranking() const;
};

/// Parses a sectioned problem file.  Sections may appear in any order;
/// unknown sections, duplicate sections and a [mapping]/[param-mapping]
/// clash are rejected.
Problem parse_problem(const std::string& text);

} // namespace jetcm
