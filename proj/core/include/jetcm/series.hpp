#pragma once

#include "jetcm/ideal.hpp"

#include <map>
#include <optional>
#include <vector>

namespace jetcm {

/// Truncated power series in a group parameter: sum c_k a^k for k <= trunc,
/// with exact Expr coefficients that never contain the parameter itself.
class ParamSeries {
public:
    ParamSeries(Atom parameter, int trunc, std::vector<Expr> coeffs);
    static ParamSeries constant(Atom parameter, int trunc, Expr c);
    static ParamSeries variable(Atom parameter, int trunc); // the parameter a

    const Atom& parameter() const { return parameter_; }
    int trunc() const { return trunc_; }
    const Expr& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<Expr>& coeffs() const { return coeffs_; }

private:
    Atom parameter_;
    int trunc_;
    std::vector<Expr> coeffs_;
};

ParamSeries series_add(const ParamSeries& a, const ParamSeries& b);
ParamSeries series_sub(const ParamSeries& a, const ParamSeries& b);
ParamSeries series_mul(const ParamSeries& a, const ParamSeries& b);
ParamSeries series_scalar_mul(const Expr& c, const ParamSeries& a);
ParamSeries series_neg(const ParamSeries& a);
/// Multiplicative inverse; requires a unit constant term
/// (throws NonUnitConstantTerm when c_0 normalizes to zero).
ParamSeries series_reciprocal(const ParamSeries& a);
/// Binomial series for a rational exponent; integer exponents >= 1 work for
/// any constant term, everything else needs a unit constant term.
ParamSeries series_pow(const ParamSeries& a, const Rational& r);
ParamSeries series_log(const ParamSeries& a);
ParamSeries series_truncate(const ParamSeries& a, int new_trunc);
/// Termwise d/da: coefficients k*c_k shifted down; trunc drops by one.
ParamSeries a_derivative(const ParamSeries& a);
/// Multiplication by the parameter: coefficients shift up, trunc fixed.
ParamSeries series_shift_up(const ParamSeries& a);

/// Expands e as a power series in the parameter atom. Every other atom is
/// carried along symbolically.
ParamSeries expr_to_series(const Expr& e, const Atom& parameter, int trunc);

/// Evaluates e with some atoms replaced by whole series (and every other atom
/// by itself); the series analogue of substitute().
ParamSeries series_eval(const Expr& e, const std::map<Atom, ParamSeries>& env,
                        const Atom& parameter, int trunc);

/// A parametric deformation of the identity on (x, y, u) jets, n = 2, m = 1,
/// with the first and second prolongations computed order-by-order:
///   p_k = D_x(u_k) - sum_{i<k} [p_i D_x(x_{k-i}) + q_i D_x(y_{k-i})]
/// and its D_y / second-order analogues, seeded by p_0 = u_x, ..., t_0 = u_yy.
struct ParamMapping {
    JetContext context;
    Atom parameter;
    int trunc = 0;
    ParamSeries xbar, ybar, ubar;
    std::optional<ParamSeries> pbar, qbar;       // first prolongation
    std::optional<ParamSeries> rbar, sbar, tbar; // second prolongation
};

/// Builds a ParamMapping from the three series; the order-0 coefficients must
/// be the identity (x, y, u).
ParamMapping make_param_mapping(const JetContext& ctx, const Atom& parameter,
                                ParamSeries xbar, ParamSeries ybar, ParamSeries ubar);

/// Fills pbar/qbar (order >= 1) and rbar/sbar/tbar (order >= 2).
ParamMapping prolong_param(ParamMapping map, int order);

/// Substitutes the barred series into the (single) evolution equation of sys
/// and reduces every coefficient modulo sys; the all-zero series certifies a
/// parametric symmetry up to the truncation order.
ParamSeries series_substitute_residual(const OrientedSystem& sys, const ParamMapping& map);

/// The Burgers h-condition: h generates the mapping v = u + 2 D_x(h)/h.
/// VERIFIED iff D_y(h) - D_x^2(h) - u D_x(h) lies in the ideal and the Burgers
/// residual of v, cleared by h^2, also reduces into the ideal.
Report verify_h_condition(const Expr& h, const OrientedSystem& sys);

} // namespace jetcm
