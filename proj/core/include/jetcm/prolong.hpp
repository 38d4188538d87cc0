#pragma once

#include "jetcm/expr.hpp"
#include "jetcm/jet.hpp"

#include <map>
#include <vector>

namespace jetcm {

/// A jet-space mapping (f, g): the target independents y_k = f_k(x, ..., u_alpha)
/// and target dependents v_j = g_j(x, ..., u_alpha), all written over the
/// source context.  Source and target contexts have the same n and m.
struct Mapping {
    JetContext source;
    JetContext target;
    std::vector<Expr> f; // n components
    std::vector<Expr> g; // m components
};

using ExprMatrix = std::vector<std::vector<Expr>>;

/// Entry (i, k) = D_i(components[k]): row = derivative direction, column =
/// component.  This layout is fixed project-wide.
ExprMatrix total_jacobian(const std::vector<Expr>& components, int n_independents);

struct SymbolicInverse {
    ExprMatrix inverse; // standard matrix inverse: inverse * M == identity
    Expr det;
};

/// Adjugate inverse for n <= 4; throws SingularMatrix when the determinant is
/// identically zero.  (Pointwise invertibility is not checked.)
SymbolicInverse symbolic_inverse(const ExprMatrix& m);

/// The mapping lifted to target jets of order q.  components[(j, alpha)] is
/// the source expression for v^j_alpha; the order-0 components equal g.
/// New components solve the chain rule D_i(v_alpha) = sum_k Df[i][k] * v_(alpha+1_k),
/// i.e. rows of total derivatives times the inverse Jacobian.
struct LiftedMapping {
    Mapping base;
    int order = 0;
    std::map<std::pair<int, MultiIndex>, Expr> components;
    ExprMatrix df;
    ExprMatrix df_inverse;
    Expr df_det;

    const Expr& component(int j, const MultiIndex& alpha) const;
};

LiftedMapping lift(const Mapping& mapping, int order);

/// phi^*: substitutes every target atom of target_expr by its lifted source
/// expression.  Throws OrderExceeded when target_expr uses derivatives above
/// the lifted order.
Expr pullback(const LiftedMapping& lifted, const Expr& target_expr);

/// Residuals of the contact condition D(v_alpha) = v_(alpha+1) * Df for every
/// |alpha| < order.  All-zero certifies that the canonical target forms pull
/// back into the source contact submodule.
struct ContactCheck {
    struct Entry {
        int j;
        MultiIndex alpha;
        int direction;
        Expr residual;
        bool zero;
    };
    std::vector<Entry> entries;
    bool all_zero = true;
};

ContactCheck verify_contact(const LiftedMapping& lifted);

} // namespace jetcm
