#include "jetcm/jet.hpp"

#include "jetcm/error.hpp"

namespace jetcm {

Expr total_derivative(const Expr& e, int k) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return Expr::integer(0);
    case Expr::Kind::Atomic: {
        const Atom& a = e.atom_value();
        switch (a.kind()) {
        case Atom::Kind::Independent:
            return Expr::integer(a.index() == k ? 1 : 0);
        case Atom::Kind::Dependent:
            return Expr::atom(Atom::dependent(a.index(), a.alpha().bumped(k)));
        case Atom::Kind::Parameter:
            return Expr::integer(0);
        case Atom::Kind::FuncDeriv:
            if (a.index() != k) return Expr::integer(0);
            return Expr::atom(Atom::func_deriv(a.name(), a.index(), a.deriv_order() + 1));
        }
        throw Error(ErrorKind::Internal, "unreachable atom kind");
    }
    case Expr::Kind::Sum: {
        std::vector<Expr> parts;
        parts.reserve(e.operands().size());
        for (const auto& t : e.operands()) parts.push_back(total_derivative(t, k));
        return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Product: {
        const auto& fs = e.operands();
        std::vector<Expr> terms;
        terms.reserve(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) {
            std::vector<Expr> factors;
            factors.reserve(fs.size());
            for (size_t j = 0; j < fs.size(); ++j)
                factors.push_back(j == i ? total_derivative(fs[j], k) : fs[j]);
            terms.push_back(Expr::product(std::move(factors)));
        }
        return Expr::sum(std::move(terms));
    }
    case Expr::Kind::Power: {
        const Rational& r = e.exponent();
        return Expr::product({Expr::constant(r),
                              Expr::pow(e.base(), r - Rational(1)),
                              total_derivative(e.base(), k)});
    }
    case Expr::Kind::Log:
        return Expr::product({total_derivative(e.log_argument(), k),
                              Expr::pow(e.log_argument(), Rational(-1))});
    }
    throw Error(ErrorKind::Internal, "unreachable expr kind");
}

Expr total_derivative_multi(const Expr& e, const MultiIndex& alpha) {
    Expr cur = e;
    for (int k = 0; k < alpha.size(); ++k)
        for (int c = 0; c < alpha[k]; ++c) cur = total_derivative(cur, k);
    return cur;
}

std::map<Atom, Expr> jet_of_solution(const std::vector<Expr>& closed_forms,
                                     int n_independents, int order) {
    for (const auto& f : closed_forms)
        f.for_each_atom([](const Atom& a) {
            if (!a.is_independent() && !a.is_parameter())
                throw Error(ErrorKind::DomainError,
                            "closed-form solutions may contain only independent "
                            "variables and parameters");
        });
    std::map<Atom, Expr> out;
    for (int j = 0; j < static_cast<int>(closed_forms.size()); ++j) {
        for (int p = 0; p <= order; ++p) {
            for (const auto& alpha : multi_indices_of_order(n_independents, p)) {
                Expr d = total_derivative_multi(closed_forms[static_cast<size_t>(j)], alpha);
                out.emplace(Atom::dependent(j, alpha), d);
            }
        }
    }
    return out;
}

} // namespace jetcm
