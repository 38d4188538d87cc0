#include "jetcm/format.hpp"

#include "jetcm/error.hpp"

namespace jetcm {

std::string format_atom(const Atom& a, const JetContext& ctx) {
    switch (a.kind()) {
    case Atom::Kind::Independent:
        return ctx.independents().at(static_cast<size_t>(a.index()));
    case Atom::Kind::Dependent: {
        std::string s = ctx.dependents().at(static_cast<size_t>(a.index()));
        if (a.alpha().is_zero()) return s;
        s += "[";
        bool first = true;
        for (int k = 0; k < a.alpha().size(); ++k) {
            for (int c = 0; c < a.alpha()[k]; ++c) {
                if (!first) s += ",";
                s += ctx.independents().at(static_cast<size_t>(k));
                first = false;
            }
        }
        s += "]";
        return s;
    }
    case Atom::Kind::Parameter:
        return a.name();
    case Atom::Kind::FuncDeriv: {
        const std::string arg = ctx.independents().at(static_cast<size_t>(a.index()));
        if (a.deriv_order() <= 2) {
            std::string s = a.name();
            for (int i = 0; i < a.deriv_order(); ++i) s += "'";
            return s + "(" + arg + ")";
        }
        return "diff(" + a.name() + "," + arg + "," + std::to_string(a.deriv_order()) + ")";
    }
    }
    throw Error(ErrorKind::Internal, "unreachable atom kind");
}

namespace {

// precedence levels: sum 0, product 1, power 3, primary 4
constexpr int kSum = 0;
constexpr int kProduct = 1;
constexpr int kPower = 3;
constexpr int kPrimary = 4;

std::string fmt(const Expr& e, const JetContext& ctx, int min_level);

std::string fmt_exponent(const Rational& r) {
    if (r.is_integer() && !r.is_negative()) return r.str();
    return "(" + r.str() + ")";
}

bool negative_leading(const Expr& e) {
    if (e.kind() == Expr::Kind::Constant) return e.constant_value().is_negative();
    if (e.kind() == Expr::Kind::Product) {
        const Expr& first = e.operands().front();
        return first.kind() == Expr::Kind::Constant && first.constant_value().is_negative();
    }
    return false;
}

std::string fmt_product(const Expr& e, const JetContext& ctx) {
    const auto& fs = e.operands();
    std::string s;
    size_t i = 0;
    bool need_star = false;
    if (fs[0].kind() == Expr::Kind::Constant) {
        // a leading constant never needs parentheses: "-2*x" and "1/2*x"
        // re-parse to the same value
        const Rational& c = fs[0].constant_value();
        i = 1;
        if (c == Rational(-1)) {
            s = "-";
        } else {
            s = c.str();
            need_star = true;
        }
    }
    for (; i < fs.size(); ++i) {
        if (need_star) s += "*";
        s += fmt(fs[i], ctx, kPower);
        need_star = true;
    }
    return s;
}

int level_of(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Sum: return kSum;
    case Expr::Kind::Product: return kProduct;
    case Expr::Kind::Power: return kPower;
    case Expr::Kind::Constant:
        return e.constant_value().is_negative() || !e.constant_value().is_integer() ? kProduct
                                                                                    : kPrimary;
    default: return kPrimary;
    }
}

std::string fmt(const Expr& e, const JetContext& ctx, int min_level) {
    std::string body;
    switch (e.kind()) {
    case Expr::Kind::Constant:
        body = e.constant_value().str();
        break;
    case Expr::Kind::Atomic:
        body = format_atom(e.atom_value(), ctx);
        break;
    case Expr::Kind::Sum: {
        const auto& ts = e.operands();
        body = fmt(ts[0], ctx, kProduct);
        for (size_t i = 1; i < ts.size(); ++i) {
            if (negative_leading(ts[i])) {
                body += " - " + fmt(-ts[i], ctx, kProduct);
            } else {
                body += " + " + fmt(ts[i], ctx, kProduct);
            }
        }
        break;
    }
    case Expr::Kind::Product:
        body = fmt_product(e, ctx);
        break;
    case Expr::Kind::Power: {
        // a power's base must be primary; negative/fractional constants need
        // their own parentheses to survive re-parsing
        std::string b = fmt(e.base(), ctx, kPrimary);
        body = b + "^" + fmt_exponent(e.exponent());
        break;
    }
    case Expr::Kind::Log:
        body = "log(" + fmt(e.log_argument(), ctx, kSum) + ")";
        break;
    }
    if (level_of(e) < min_level) return "(" + body + ")";
    return body;
}

} // namespace

std::string format_expr(const Expr& e, const JetContext& ctx) {
    return fmt(e, ctx, kSum);
}

} // namespace jetcm
