#pragma once

#include "jetcm/eval.hpp"
#include "jetcm/expr.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetcm {

enum class Verdict { Verified, Falsified, Err };

const char* verdict_name(Verdict v);

/// Outcome of a verification run.  A FALSIFIED verdict always carries at
/// least one nonzero residual; VERIFIED residuals all print as "0".
struct Report {
    struct Residual {
        std::string equation;    // what was checked
        std::string normal_form; // reduced residual, formatted
        Expr residual;           // the same, as an expression
        bool zero = false;
    };
    struct SpotCheck {
        std::map<std::string, std::string> assignment;
        std::string value;
    };

    Verdict verdict = Verdict::Verified;
    std::vector<Residual> residuals;
    std::vector<SpotCheck> spot_checks;
    std::vector<std::string> notes;
    std::map<std::string, std::string> options;
};

/// Evaluates each nonzero residual (and one zero residual, as a control) at
/// `count` seeded random positive rational points.  Deterministic for a fixed
/// seed.
void add_spot_checks(Report& report, const JetContext& ctx, std::uint64_t seed, int count = 3);

} // namespace jetcm
