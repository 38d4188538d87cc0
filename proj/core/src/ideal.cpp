#include "jetcm/ideal.hpp"

#include "jetcm/error.hpp"
#include "jetcm/format.hpp"

#include <algorithm>
#include <set>

namespace jetcm {

Ranking Ranking::elimination(int independent_index) {
    Ranking r;
    r.mode_ = Mode::Elimination;
    r.elim_index_ = independent_index;
    return r;
}

Ranking Ranking::total_order() {
    Ranking r;
    r.mode_ = Mode::TotalOrder;
    return r;
}

Ranking Ranking::default_for(const JetContext& ctx) {
    return elimination(ctx.n() - 1);
}

Ranking Ranking::parse(const std::string& text, const JetContext& ctx) {
    if (text == "total") return total_order();
    if (text.rfind("elim:", 0) == 0) {
        const std::string name = text.substr(5);
        if (auto i = ctx.find_independent(name)) return elimination(*i);
        throw Error(ErrorKind::UnknownSymbol, "ranking names unknown independent: " + name);
    }
    throw Error(ErrorKind::UnknownOption, "ranking must be 'total' or 'elim:<variable>'");
}

std::strong_ordering Ranking::compare(const Atom& a, const Atom& b) const {
    if (!a.is_dependent() || !b.is_dependent())
        throw Error(ErrorKind::Internal, "ranking compares jet atoms only");
    if (mode_ == Mode::Elimination) {
        if (auto c = a.alpha()[elim_index_] <=> b.alpha()[elim_index_]; c != 0) return c;
        if (auto c = a.alpha().order() <=> b.alpha().order(); c != 0) return c;
    } else {
        if (auto c = a.alpha().order() <=> b.alpha().order(); c != 0) return c;
        const int last = a.alpha().size() - 1;
        if (auto c = a.alpha()[last] <=> b.alpha()[last]; c != 0) return c;
    }
    if (auto c = a.alpha() <=> b.alpha(); c != 0) return c;
    return a.index() <=> b.index();
}

std::string Ranking::describe(const JetContext& ctx) const {
    if (mode_ == Mode::TotalOrder) return "total";
    return "elim:" + ctx.independents().at(static_cast<size_t>(elim_index_));
}

namespace {

/// All dependent atoms occurring in e (descending into denominators/logs).
std::set<Atom> dependent_atoms(const NormalForm& nf) {
    std::set<Atom> out;
    nf_for_each_atom(nf, [&](const Atom& a) {
        if (a.is_dependent()) out.insert(a);
    });
    return out;
}

} // namespace

OrientedSystem orient(const std::vector<Equation>& equations, const Ranking& ranking,
                      const JetContext& ctx) {
    OrientedSystem sys;
    sys.context = ctx;
    sys.ranking = ranking;
    for (const auto& eq : equations) {
        Expr residual = eq.lhs - eq.rhs;
        NormalForm nf = normalize(residual);
        std::set<Atom> deps = dependent_atoms(nf);
        if (deps.empty())
            throw Error(ErrorKind::NotSolvable, "equation contains no jet coordinates");
        Atom principal = *deps.begin();
        for (const Atom& a : deps)
            if (ranking.less(principal, a)) principal = a;

        std::map<std::vector<int>, Expr> parts;
        try {
            parts = collect(residual, {principal});
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotPolynomial)
                throw Error(ErrorKind::NotSolvable,
                            "highest derivative " + format_atom(principal, ctx) +
                                " cannot be isolated");
            throw;
        }
        Expr coeff = Expr::integer(0);
        Expr rest = Expr::integer(0);
        for (const auto& [expo, part] : parts) {
            if (expo[0] == 0) rest = part;
            else if (expo[0] == 1) coeff = part;
            else
                throw Error(ErrorKind::NotSolvable,
                            "highest derivative " + format_atom(principal, ctx) +
                                " occurs nonlinearly");
        }
        if (is_zero(coeff))
            throw Error(ErrorKind::NotSolvable, "degenerate equation");
        Expr rhs = canonical(-rest / coeff);
        // the solved form must sit strictly below its principal
        NormalForm rhs_nf = normalize(rhs);
        for (const Atom& a : dependent_atoms(rhs_nf))
            if (ranking.compare(a, principal) >= 0)
                throw Error(ErrorKind::NotSolvable,
                            "solved form still contains " + format_atom(a, ctx));
        sys.equations.push_back({principal, std::move(rhs)});
    }
    for (size_t i = 0; i < sys.equations.size(); ++i) {
        for (size_t j = i + 1; j < sys.equations.size(); ++j) {
            const Atom& a = sys.equations[i].principal;
            const Atom& b = sys.equations[j].principal;
            if (a.index() != b.index()) continue;
            if (a.alpha().dominates(b.alpha()) || b.alpha().dominates(a.alpha()))
                throw Error(ErrorKind::OverlappingPrincipals,
                            format_atom(a, ctx) + " overlaps " + format_atom(b, ctx));
        }
    }
    return sys;
}

namespace {

/// The oriented equation (if any) whose principal divides `a`, i.e.
/// a = principal + beta componentwise.
const OrientedEquation* matching_rule(const OrientedSystem& sys, const Atom& a) {
    for (const auto& eq : sys.equations)
        if (eq.principal.index() == a.index() && a.alpha().dominates(eq.principal.alpha()))
            return &eq;
    return nullptr;
}

} // namespace

Expr reduce(const Expr& e, const OrientedSystem& sys, ReduceStats* stats) {
    Expr cur = e;
    int steps = 0;
    for (;;) {
        NormalForm nf = normalize(cur);
        std::optional<Atom> target;
        const OrientedEquation* rule = nullptr;
        for (const Atom& a : dependent_atoms(nf)) {
            const OrientedEquation* r = matching_rule(sys, a);
            if (!r) continue;
            if (!target || sys.ranking.less(*target, a)) {
                target = a;
                rule = r;
            }
        }
        if (!target) {
            if (stats) stats->steps = steps;
            return denormalize(nf);
        }
        MultiIndex beta = target->alpha().minus(rule->principal.alpha());
        Expr replacement = total_derivative_multi(rule->rhs, beta);
        cur = substitute(denormalize(nf), {{*target, replacement}});
        ++steps;
    }
}

bool is_member(const Expr& e, const OrientedSystem& sys) {
    return is_zero(reduce(e, sys));
}

Report verify_solution_map(const OrientedSystem& source, const std::vector<Equation>& target,
                           const JetContext& target_ctx, const Mapping& mapping, int order) {
    Report report;
    LiftedMapping lifted = lift(mapping, order);
    bool all_zero = true;
    for (const auto& eq : target) {
        Expr pb = pullback(lifted, eq.lhs - eq.rhs);
        Expr red = reduce(pb, source);
        bool zero = is_zero(red);
        if (!zero) all_zero = false;
        report.residuals.push_back(
            {format_expr(eq.lhs, target_ctx) + " = " + format_expr(eq.rhs, target_ctx),
             format_expr(red, source.context), red, zero});
    }
    report.verdict = all_zero ? Verdict::Verified : Verdict::Falsified;
    return report;
}

Report verify_symmetry(const OrientedSystem& sys, const Mapping& mapping, int order) {
    std::vector<Equation> target;
    for (const auto& eq : sys.equations)
        target.push_back({Expr::atom(eq.principal), eq.rhs});
    return verify_solution_map(sys, target, mapping.target, mapping, order);
}

std::vector<DeterminingEquation> determining_equations(
    const OrientedSystem& source, const std::vector<Equation>& target,
    const JetContext& target_ctx, const Mapping& mapping, int order,
    const std::vector<Atom>& top_atoms) {
    (void)target_ctx;
    LiftedMapping lifted = lift(mapping, order);
    std::vector<DeterminingEquation> out;
    for (const auto& eq : target) {
        Expr pb = pullback(lifted, eq.lhs - eq.rhs);
        Expr red = reduce(pb, source);
        auto buckets = collect(red, top_atoms);
        for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
            if (is_zero(it->second)) continue;
            std::vector<Expr> mono;
            for (size_t k = 0; k < top_atoms.size(); ++k)
                if (it->first[k] != 0)
                    mono.push_back(Expr::pow(Expr::atom(top_atoms[k]), Rational(it->first[k])));
            out.push_back({it->first, Expr::product(std::move(mono)), it->second});
        }
    }
    return out;
}

} // namespace jetcm
