#pragma once

#include "jetcm/normal_form.hpp"
#include "jetcm/prolong.hpp"
#include "jetcm/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcm {

struct Equation {
    Expr lhs;
    Expr rhs;
};

/// Total order on jet atoms used to pick principal derivatives and to drive
/// reduction.  Elimination mode ranks any derivative in the eliminated
/// direction above every derivative without one; the default eliminates the
/// last-declared independent variable, which orients evolution systems the
/// way their reductions are usually written (u_y above u_xx for Burgers
/// declared "independent: x y").
class Ranking {
public:
    enum class Mode { Elimination, TotalOrder };

    static Ranking elimination(int independent_index);
    static Ranking total_order();
    static Ranking default_for(const JetContext& ctx);
    /// "total" or "elim:<independent name>".
    static Ranking parse(const std::string& text, const JetContext& ctx);

    std::strong_ordering compare(const Atom& a, const Atom& b) const;
    bool less(const Atom& a, const Atom& b) const { return compare(a, b) < 0; }
    std::string describe(const JetContext& ctx) const;

private:
    Mode mode_ = Mode::Elimination;
    int elim_index_ = 0;
};

/// principal = rhs with the rhs strictly below the principal in the ranking.
struct OrientedEquation {
    Atom principal; // a Dependent atom
    Expr rhs;
};

/// A PDE system usable as a confluent rewrite system: principals are pairwise
/// non-overlapping (none is a total derivative of another).
struct OrientedSystem {
    JetContext context;
    std::vector<OrientedEquation> equations;
    Ranking ranking;
};

/// Solves each equation for its highest-ranked derivative.  Throws NotSolvable
/// when that derivative occurs nonlinearly (or cannot be isolated), and
/// OverlappingPrincipals when two principals overlap.
OrientedSystem orient(const std::vector<Equation>& equations, const Ranking& ranking,
                      const JetContext& ctx);

struct ReduceStats {
    int steps = 0;
};

/// Rewrites e modulo the differential ideal: the highest-ranked atom that is a
/// derivative of some principal is replaced by the corresponding derivative of
/// that rhs, renormalizing between passes, until none remains.
Expr reduce(const Expr& e, const OrientedSystem& sys, ReduceStats* stats = nullptr);

bool is_member(const Expr& e, const OrientedSystem& sys);

/// Lifts the mapping to order q, pulls every target residual lhs - rhs back,
/// reduces modulo the source system; VERIFIED iff every residual reduces to
/// zero.  Residual labels are formatted in the target context.
Report verify_solution_map(const OrientedSystem& source, const std::vector<Equation>& target,
                           const JetContext& target_ctx, const Mapping& mapping, int order);

/// verify_solution_map with target = source (atoms are index-based, so the
/// source equations serve verbatim as target equations).
Report verify_symmetry(const OrientedSystem& sys, const Mapping& mapping, int order);

struct DeterminingEquation {
    std::vector<int> exponents; // per top atom
    Expr monomial;              // product of the top atoms to those exponents
    Expr coefficient;
};

/// Pulls the target residuals back through an ansatz mapping (components may
/// contain unknown-function atoms), reduces modulo the source, and collects
/// coefficients of the listed jet atoms; each coefficient equated to zero is
/// one determining equation.  Ordered by descending exponent vector.
std::vector<DeterminingEquation> determining_equations(
    const OrientedSystem& source, const std::vector<Equation>& target,
    const JetContext& target_ctx, const Mapping& mapping, int order,
    const std::vector<Atom>& top_atoms);

} // namespace jetcm
