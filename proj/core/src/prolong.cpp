#include "jetcm/prolong.hpp"

#include "jetcm/error.hpp"
#include "jetcm/normal_form.hpp"

namespace jetcm {

ExprMatrix total_jacobian(const std::vector<Expr>& components, int n_independents) {
    const int n = n_independents;
    ExprMatrix out(static_cast<size_t>(n), std::vector<Expr>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            out[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                total_derivative(components[static_cast<size_t>(k)], i);
    return out;
}

namespace {

Expr det_recursive(const ExprMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1)
        return m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    std::vector<Expr> terms;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != c) sub_cols.push_back(cols[k]);
        Expr cofactor = det_recursive(m, sub_rows, sub_cols);
        Expr term = m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[c])] * cofactor;
        terms.push_back(c % 2 == 0 ? term : -term);
    }
    return Expr::sum(std::move(terms));
}

Expr determinant(const ExprMatrix& m) {
    std::vector<int> idx;
    for (size_t i = 0; i < m.size(); ++i) idx.push_back(static_cast<int>(i));
    return det_recursive(m, idx, idx);
}

} // namespace

SymbolicInverse symbolic_inverse(const ExprMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n < 1 || n > 4)
        throw Error(ErrorKind::Unsupported, "symbolic inverse supports 1 <= n <= 4");
    Expr det = canonical(determinant(m));
    if (is_zero(det))
        throw Error(ErrorKind::SingularMatrix, "Jacobian determinant is identically zero");
    Expr det_inv = Expr::pow(det, Rational(-1));
    ExprMatrix inv(static_cast<size_t>(n), std::vector<Expr>(static_cast<size_t>(n)));
    if (n == 1) {
        inv[0][0] = canonical(det_inv);
        return {std::move(inv), std::move(det)};
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != i) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            Expr minor = det_recursive(m, rows, cols);
            Expr cof = (i + j) % 2 == 0 ? minor : -minor;
            // inverse = adj / det, adj[j][i] = cofactor[i][j]
            inv[static_cast<size_t>(j)][static_cast<size_t>(i)] = canonical(cof * det_inv);
        }
    }
    return {std::move(inv), std::move(det)};
}

const Expr& LiftedMapping::component(int j, const MultiIndex& alpha) const {
    auto it = components.find({j, alpha});
    if (it == components.end())
        throw Error(ErrorKind::OrderExceeded, "no lifted component for the requested jet atom");
    return it->second;
}

LiftedMapping lift(const Mapping& mapping, int order) {
    const int n = mapping.source.n();
    const int m = mapping.source.m();
    if (static_cast<int>(mapping.f.size()) != n || static_cast<int>(mapping.g.size()) != m)
        throw Error(ErrorKind::DomainError, "mapping component count does not match context");
    LiftedMapping out;
    out.base = mapping;
    out.order = order;
    out.df = total_jacobian(mapping.f, n);
    auto inv = symbolic_inverse(out.df);
    out.df_inverse = std::move(inv.inverse);
    out.df_det = std::move(inv.det);

    for (int j = 0; j < m; ++j)
        out.components[{j, MultiIndex::zeros(n)}] = canonical(mapping.g[static_cast<size_t>(j)]);

    for (int level = 1; level <= order; ++level) {
        for (const auto& beta : multi_indices_of_order(n, level)) {
            int k = 0;
            while (beta[k] == 0) ++k; // canonical derivation path: first nonzero direction
            std::vector<int> e = beta.entries();
            e[static_cast<size_t>(k)] -= 1;
            MultiIndex alpha(std::move(e));
            for (int j = 0; j < m; ++j) {
                const Expr& prev = out.components.at({j, alpha});
                std::vector<Expr> terms;
                for (int i = 0; i < n; ++i)
                    terms.push_back(out.df_inverse[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                                    total_derivative(prev, i));
                out.components[{j, beta}] = canonical(Expr::sum(std::move(terms)));
            }
        }
    }
    return out;
}

Expr pullback(const LiftedMapping& lifted, const Expr& target_expr) {
    const int n = lifted.base.source.n();
    target_expr.for_each_atom([&](const Atom& a) {
        if (a.is_dependent() && a.alpha().order() > lifted.order)
            throw Error(ErrorKind::OrderExceeded,
                        "target expression uses derivatives above the lifted order");
    });
    std::map<Atom, Expr> bindings;
    for (int i = 0; i < n; ++i)
        bindings.emplace(Atom::independent(i), lifted.base.f[static_cast<size_t>(i)]);
    for (const auto& [key, comp] : lifted.components)
        bindings.emplace(Atom::dependent(key.first, key.second), comp);
    return substitute(target_expr, bindings);
}

ContactCheck verify_contact(const LiftedMapping& lifted) {
    ContactCheck check;
    const int n = lifted.base.source.n();
    const int m = lifted.base.source.m();
    for (int level = 0; level < lifted.order; ++level) {
        for (const auto& alpha : multi_indices_of_order(n, level)) {
            for (int j = 0; j < m; ++j) {
                const Expr& v = lifted.components.at({j, alpha});
                for (int i = 0; i < n; ++i) {
                    // D_i(v_alpha) - sum_k Df[i][k] * v_(alpha+1_k)
                    std::vector<Expr> terms{total_derivative(v, i)};
                    for (int k = 0; k < n; ++k)
                        terms.push_back(-(lifted.df[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                          lifted.components.at({j, alpha.bumped(k)})));
                    Expr residual = canonical(Expr::sum(std::move(terms)));
                    bool zero = is_zero(residual);
                    if (!zero) check.all_zero = false;
                    check.entries.push_back({j, alpha, i, std::move(residual), zero});
                }
            }
        }
    }
    return check;
}

} // namespace jetcm
