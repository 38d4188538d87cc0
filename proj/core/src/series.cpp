#include "jetcm/series.hpp"

#include "jetcm/error.hpp"
#include "jetcm/format.hpp"

namespace jetcm {

ParamSeries::ParamSeries(Atom parameter, int trunc, std::vector<Expr> coeffs)
    : parameter_(std::move(parameter)), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (trunc_ < 0) throw Error(ErrorKind::DomainError, "negative truncation order");
    coeffs_.resize(static_cast<size_t>(trunc_) + 1, Expr::integer(0));
    for (const auto& c : coeffs_)
        if (c.contains_atom(parameter_))
            throw Error(ErrorKind::DomainError,
                        "series coefficient contains the series parameter");
}

ParamSeries ParamSeries::constant(Atom parameter, int trunc, Expr c) {
    return ParamSeries(std::move(parameter), trunc, {std::move(c)});
}

ParamSeries ParamSeries::variable(Atom parameter, int trunc) {
    std::vector<Expr> coeffs{Expr::integer(0)};
    if (trunc >= 1) coeffs.push_back(Expr::integer(1));
    return ParamSeries(std::move(parameter), trunc, std::move(coeffs));
}

namespace {

void check_compatible(const ParamSeries& a, const ParamSeries& b) {
    if (!(a.parameter() == b.parameter()) || a.trunc() != b.trunc())
        throw Error(ErrorKind::DomainError, "series parameter/truncation mismatch");
}

} // namespace

ParamSeries series_add(const ParamSeries& a, const ParamSeries& b) {
    check_compatible(a, b);
    std::vector<Expr> out;
    out.reserve(static_cast<size_t>(a.trunc()) + 1);
    for (int k = 0; k <= a.trunc(); ++k) out.push_back(a.coeff(k) + b.coeff(k));
    return ParamSeries(a.parameter(), a.trunc(), std::move(out));
}

ParamSeries series_sub(const ParamSeries& a, const ParamSeries& b) {
    return series_add(a, series_neg(b));
}

ParamSeries series_neg(const ParamSeries& a) {
    std::vector<Expr> out;
    for (int k = 0; k <= a.trunc(); ++k) out.push_back(-a.coeff(k));
    return ParamSeries(a.parameter(), a.trunc(), std::move(out));
}

ParamSeries series_mul(const ParamSeries& a, const ParamSeries& b) {
    check_compatible(a, b);
    std::vector<Expr> out;
    for (int k = 0; k <= a.trunc(); ++k) {
        std::vector<Expr> terms;
        for (int i = 0; i <= k; ++i) terms.push_back(a.coeff(i) * b.coeff(k - i));
        out.push_back(canonical(Expr::sum(std::move(terms))));
    }
    return ParamSeries(a.parameter(), a.trunc(), std::move(out));
}

ParamSeries series_scalar_mul(const Expr& c, const ParamSeries& a) {
    std::vector<Expr> out;
    for (int k = 0; k <= a.trunc(); ++k) out.push_back(canonical(c * a.coeff(k)));
    return ParamSeries(a.parameter(), a.trunc(), std::move(out));
}

ParamSeries series_reciprocal(const ParamSeries& a) {
    if (is_zero(a.coeff(0)))
        throw Error(ErrorKind::NonUnitConstantTerm,
                    "series reciprocal needs a nonzero constant term");
    Expr c0_inv = Expr::pow(a.coeff(0), Rational(-1));
    std::vector<Expr> r;
    r.push_back(canonical(c0_inv));
    for (int k = 1; k <= a.trunc(); ++k) {
        std::vector<Expr> terms;
        for (int i = 1; i <= k; ++i) terms.push_back(a.coeff(i) * r[static_cast<size_t>(k - i)]);
        r.push_back(canonical(-(c0_inv * Expr::sum(std::move(terms)))));
    }
    return ParamSeries(a.parameter(), a.trunc(), std::move(r));
}

ParamSeries series_pow(const ParamSeries& a, const Rational& r) {
    if (r.is_zero())
        return ParamSeries::constant(a.parameter(), a.trunc(), Expr::integer(1));
    if (r.is_one()) return a;
    if (r.is_integer() && !r.is_negative()) {
        long long k = r.as_integer();
        ParamSeries result = ParamSeries::constant(a.parameter(), a.trunc(), Expr::integer(1));
        ParamSeries base = a;
        while (k > 0) {
            if (k & 1) result = series_mul(result, base);
            k >>= 1;
            if (k > 0) base = series_mul(base, base);
        }
        return result;
    }
    if (is_zero(a.coeff(0)))
        throw Error(ErrorKind::NonUnitConstantTerm,
                    "fractional or negative series power needs a nonzero constant term");
    // (c0 (1+z))^r = c0^r sum binom(r,k) z^k with z = a/c0 - 1 nilpotent
    Expr c0 = a.coeff(0);
    ParamSeries z = series_scalar_mul(Expr::pow(c0, Rational(-1)), a);
    std::vector<Expr> z_coeffs = z.coeffs();
    z_coeffs[0] = Expr::integer(0);
    z = ParamSeries(a.parameter(), a.trunc(), std::move(z_coeffs));

    ParamSeries acc = ParamSeries::constant(a.parameter(), a.trunc(), Expr::integer(1));
    ParamSeries zpow = acc;
    Rational binom(1);
    for (int k = 1; k <= a.trunc(); ++k) {
        zpow = series_mul(zpow, z);
        binom = binom * (r - Rational(k - 1)) / Rational(k);
        acc = series_add(acc, series_scalar_mul(Expr::constant(binom), zpow));
    }
    return series_scalar_mul(Expr::pow(c0, r), acc);
}

ParamSeries series_log(const ParamSeries& a) {
    if (is_zero(a.coeff(0)))
        throw Error(ErrorKind::NonUnitConstantTerm,
                    "series logarithm needs a nonzero constant term");
    Expr c0 = a.coeff(0);
    ParamSeries z = series_scalar_mul(Expr::pow(c0, Rational(-1)), a);
    std::vector<Expr> z_coeffs = z.coeffs();
    z_coeffs[0] = Expr::integer(0);
    z = ParamSeries(a.parameter(), a.trunc(), std::move(z_coeffs));

    // log(c0) + sum (-1)^(k+1) z^k / k
    ParamSeries acc = ParamSeries::constant(a.parameter(), a.trunc(), Expr::log(c0));
    ParamSeries zpow = ParamSeries::constant(a.parameter(), a.trunc(), Expr::integer(1));
    for (int k = 1; k <= a.trunc(); ++k) {
        zpow = series_mul(zpow, z);
        Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        acc = series_add(acc, series_scalar_mul(Expr::constant(c), zpow));
    }
    return acc;
}

ParamSeries series_truncate(const ParamSeries& a, int new_trunc) {
    if (new_trunc > a.trunc())
        throw Error(ErrorKind::DomainError, "cannot extend a truncated series");
    std::vector<Expr> out(a.coeffs().begin(), a.coeffs().begin() + new_trunc + 1);
    return ParamSeries(a.parameter(), new_trunc, std::move(out));
}

ParamSeries a_derivative(const ParamSeries& a) {
    if (a.trunc() < 1)
        throw Error(ErrorKind::DomainError, "cannot differentiate a series truncated at 0");
    std::vector<Expr> out;
    for (int k = 1; k <= a.trunc(); ++k)
        out.push_back(canonical(Expr::integer(k) * a.coeff(k)));
    return ParamSeries(a.parameter(), a.trunc() - 1, std::move(out));
}

ParamSeries series_shift_up(const ParamSeries& a) {
    std::vector<Expr> out;
    out.push_back(Expr::integer(0));
    for (int k = 0; k < a.trunc(); ++k) out.push_back(a.coeff(k));
    return ParamSeries(a.parameter(), a.trunc(), std::move(out));
}

ParamSeries series_eval(const Expr& e, const std::map<Atom, ParamSeries>& env,
                        const Atom& parameter, int trunc) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return ParamSeries::constant(parameter, trunc, e);
    case Expr::Kind::Atomic: {
        const Atom& a = e.atom_value();
        if (a == parameter) return ParamSeries::variable(parameter, trunc);
        auto it = env.find(a);
        if (it != env.end()) return series_truncate(it->second, trunc);
        return ParamSeries::constant(parameter, trunc, e);
    }
    case Expr::Kind::Sum: {
        ParamSeries acc = ParamSeries::constant(parameter, trunc, Expr::integer(0));
        for (const auto& t : e.operands())
            acc = series_add(acc, series_eval(t, env, parameter, trunc));
        return acc;
    }
    case Expr::Kind::Product: {
        ParamSeries acc = ParamSeries::constant(parameter, trunc, Expr::integer(1));
        for (const auto& f : e.operands())
            acc = series_mul(acc, series_eval(f, env, parameter, trunc));
        return acc;
    }
    case Expr::Kind::Power:
        return series_pow(series_eval(e.base(), env, parameter, trunc), e.exponent());
    case Expr::Kind::Log:
        return series_log(series_eval(e.log_argument(), env, parameter, trunc));
    }
    throw Error(ErrorKind::Internal, "unreachable expr kind");
}

ParamSeries expr_to_series(const Expr& e, const Atom& parameter, int trunc) {
    return series_eval(e, {}, parameter, trunc);
}

ParamMapping make_param_mapping(const JetContext& ctx, const Atom& parameter,
                                ParamSeries xbar, ParamSeries ybar, ParamSeries ubar) {
    if (ctx.n() != 2 || ctx.m() != 1)
        throw Error(ErrorKind::DomainError,
                    "parametric mappings use two independents and one dependent");
    const Expr x = Expr::atom(Atom::independent(0));
    const Expr y = Expr::atom(Atom::independent(1));
    const Expr u = Expr::atom(Atom::dependent(0, MultiIndex::zeros(2)));
    if (!equal(xbar.coeff(0), x) || !equal(ybar.coeff(0), y) || !equal(ubar.coeff(0), u))
        throw Error(ErrorKind::DomainError,
                    "a parametric mapping must restrict to the identity at order 0");
    ParamMapping pm{ctx, parameter, xbar.trunc(), std::move(xbar), std::move(ybar),
                    std::move(ubar)};
    return pm;
}

ParamMapping prolong_param(ParamMapping map, int order) {
    if (order < 1 || order > 2)
        throw Error(ErrorKind::DomainError, "parametric prolongation supports orders 1 and 2");
    const int N = map.trunc;
    auto dep = [&](std::vector<int> alpha) {
        return Expr::atom(Atom::dependent(0, MultiIndex(std::move(alpha))));
    };
    auto D = [](const Expr& e, int dir) { return total_derivative(e, dir); };
    const size_t len = static_cast<size_t>(N) + 1;

    // p_k = D_x(u_k) - sum_{i<k} [p_i D_x(x_{k-i}) + q_i D_x(y_{k-i})], p_0 = u_x,
    // and the D_y analogue for q_k; the sums run over the coefficients already
    // computed, so both lists grow together.
    std::vector<Expr> P(len), Q(len);
    P[0] = dep({1, 0});
    Q[0] = dep({0, 1});
    for (int k = 1; k <= N; ++k) {
        std::vector<Expr> tp{D(map.ubar.coeff(k), 0)};
        std::vector<Expr> tq{D(map.ubar.coeff(k), 1)};
        for (int i = 0; i < k; ++i) {
            const Expr& xs = map.xbar.coeff(k - i);
            const Expr& ys = map.ybar.coeff(k - i);
            tp.push_back(-(P[static_cast<size_t>(i)] * D(xs, 0)));
            tp.push_back(-(Q[static_cast<size_t>(i)] * D(ys, 0)));
            tq.push_back(-(P[static_cast<size_t>(i)] * D(xs, 1)));
            tq.push_back(-(Q[static_cast<size_t>(i)] * D(ys, 1)));
        }
        P[static_cast<size_t>(k)] = canonical(Expr::sum(std::move(tp)));
        Q[static_cast<size_t>(k)] = canonical(Expr::sum(std::move(tq)));
    }
    map.pbar = ParamSeries(map.parameter, N, P);
    map.qbar = ParamSeries(map.parameter, N, Q);

    if (order >= 2) {
        std::vector<Expr> R(len), S(len), T(len);
        R[0] = dep({2, 0});
        S[0] = dep({1, 1});
        T[0] = dep({0, 2});
        for (int k = 1; k <= N; ++k) {
            std::vector<Expr> tr{D(P[static_cast<size_t>(k)], 0)};
            std::vector<Expr> ts{D(P[static_cast<size_t>(k)], 1)};
            std::vector<Expr> tt{D(Q[static_cast<size_t>(k)], 1)};
            for (int i = 0; i < k; ++i) {
                const Expr& xs = map.xbar.coeff(k - i);
                const Expr& ys = map.ybar.coeff(k - i);
                tr.push_back(-(R[static_cast<size_t>(i)] * D(xs, 0)));
                tr.push_back(-(S[static_cast<size_t>(i)] * D(ys, 0)));
                ts.push_back(-(R[static_cast<size_t>(i)] * D(xs, 1)));
                ts.push_back(-(S[static_cast<size_t>(i)] * D(ys, 1)));
                tt.push_back(-(S[static_cast<size_t>(i)] * D(xs, 1)));
                tt.push_back(-(T[static_cast<size_t>(i)] * D(ys, 1)));
            }
            R[static_cast<size_t>(k)] = canonical(Expr::sum(std::move(tr)));
            S[static_cast<size_t>(k)] = canonical(Expr::sum(std::move(ts)));
            T[static_cast<size_t>(k)] = canonical(Expr::sum(std::move(tt)));
        }
        map.rbar = ParamSeries(map.parameter, N, R);
        map.sbar = ParamSeries(map.parameter, N, S);
        map.tbar = ParamSeries(map.parameter, N, T);
    }
    return map;
}

ParamSeries series_substitute_residual(const OrientedSystem& sys, const ParamMapping& map) {
    if (sys.equations.size() != 1)
        throw Error(ErrorKind::DomainError, "parametric verification expects one equation");
    const OrientedEquation& eq = sys.equations.front();
    const MultiIndex expected({0, 1});
    if (!(eq.principal.alpha() == expected))
        throw Error(ErrorKind::DomainError,
                    "parametric verification expects an evolution equation solved for u_y");
    if (!map.pbar || !map.rbar)
        throw Error(ErrorKind::DomainError, "mapping must be prolonged to order 2");
    Expr residual_expr = Expr::atom(eq.principal) - eq.rhs;
    if (residual_expr.contains_atom(map.parameter))
        throw Error(ErrorKind::DomainError,
                    "the source system must not contain the series parameter");

    std::map<Atom, ParamSeries> env;
    auto at = [&](std::vector<int> alpha) { return Atom::dependent(0, MultiIndex(std::move(alpha))); };
    env.emplace(Atom::independent(0), map.xbar);
    env.emplace(Atom::independent(1), map.ybar);
    env.emplace(at({0, 0}), map.ubar);
    env.emplace(at({1, 0}), *map.pbar);
    env.emplace(at({0, 1}), *map.qbar);
    env.emplace(at({2, 0}), *map.rbar);
    env.emplace(at({1, 1}), *map.sbar);
    env.emplace(at({0, 2}), *map.tbar);

    ParamSeries raw = series_eval(residual_expr, env, map.parameter, map.trunc);
    std::vector<Expr> reduced;
    for (int k = 0; k <= raw.trunc(); ++k) reduced.push_back(reduce(raw.coeff(k), sys));
    return ParamSeries(map.parameter, map.trunc, std::move(reduced));
}

Report verify_h_condition(const Expr& h, const OrientedSystem& sys) {
    const JetContext& ctx = sys.context;
    if (ctx.n() != 2 || ctx.m() != 1 || sys.equations.size() != 1)
        throw Error(ErrorKind::DomainError, "the h-condition applies to one evolution equation "
                                            "in two independents");
    const Expr u = Expr::atom(Atom::dependent(0, MultiIndex::zeros(2)));
    auto Dx = [](const Expr& e) { return total_derivative(e, 0); };
    auto Dy = [](const Expr& e) { return total_derivative(e, 1); };

    Report report;
    Expr cond = Dy(h) - Dx(Dx(h)) - u * Dx(h);
    Expr cond_red = reduce(cond, sys);
    bool cond_ok = is_zero(cond_red);
    report.residuals.push_back({"D_y(h) - D_x^2(h) - u*D_x(h)",
                                format_expr(cond_red, ctx), cond_red, cond_ok});
    if (!cond_ok) {
        report.verdict = Verdict::Falsified;
        return report;
    }

    // end-to-end: v = u + 2 D_x(h)/h solves the same equation, checked with
    // the h^2-cleared residual
    Expr v = u + Expr::integer(2) * Dx(h) * Expr::pow(h, Rational(-1));
    Expr burgers_residual = Dy(v) - Dx(Dx(v)) - v * Dx(v);
    Expr cleared = h * h * burgers_residual;
    Expr red = reduce(cleared, sys);
    bool ok = is_zero(red);
    report.residuals.push_back({"h^2 * (v_y - v_xx - v*v_x), v = u + 2*D_x(h)/h",
                                format_expr(red, ctx), red, ok});
    report.verdict = ok ? Verdict::Verified : Verdict::Falsified;
    return report;
}

} // namespace jetcm
