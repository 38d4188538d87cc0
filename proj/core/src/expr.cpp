#include "jetcm/expr.hpp"

#include "jetcm/error.hpp"

#include <variant>

namespace jetcm {

struct Expr::Node {
    struct SumOp { std::vector<Expr> terms; };
    struct ProductOp { std::vector<Expr> factors; };
    struct PowerOp { Expr base; Rational exponent; };
    struct LogOp { Expr argument; };
    std::variant<Rational, Atom, SumOp, ProductOp, PowerOp, LogOp> v;
};

Expr Expr::constant(Rational c) {
    auto n = std::make_shared<Node>();
    n->v = std::move(c);
    return Expr(std::move(n));
}

Expr Expr::atom(Atom a) {
    auto n = std::make_shared<Node>();
    n->v = std::move(a);
    return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    Rational c(0);
    for (auto& t : terms) {
        if (t.kind() == Kind::Constant) {
            c += t.constant_value();
        } else if (t.kind() == Kind::Sum) {
            for (const auto& s : t.operands()) {
                if (s.kind() == Kind::Constant) c += s.constant_value();
                else flat.push_back(s);
            }
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (!c.is_zero() || flat.empty()) flat.push_back(constant(c));
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->v = Node::SumOp{std::move(flat)};
    return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    Rational c(1);
    for (auto& f : factors) {
        if (f.kind() == Kind::Constant) {
            c *= f.constant_value();
        } else if (f.kind() == Kind::Product) {
            for (const auto& g : f.operands()) {
                if (g.kind() == Kind::Constant) c *= g.constant_value();
                else flat.push_back(g);
            }
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (c.is_zero()) return constant(Rational(0));
    if (flat.empty()) return constant(c);
    std::vector<Expr> out;
    out.reserve(flat.size() + 1);
    if (!c.is_one()) out.push_back(constant(c));
    for (auto& f : flat) out.push_back(std::move(f));
    if (out.size() == 1) return out.front();
    auto n = std::make_shared<Node>();
    n->v = Node::ProductOp{std::move(out)};
    return Expr(std::move(n));
}

Expr Expr::pow(Expr base, Rational exponent) {
    if (exponent.is_zero()) return constant(Rational(1));
    if (exponent.is_one()) return base;
    if (base.kind() == Kind::Constant && exponent.is_integer())
        return constant(base.constant_value().pow_integer(exponent.as_integer()));
    if (base.kind() == Kind::Power) {
        Rational combined = base.exponent() * exponent;
        return pow(base.base(), combined);
    }
    auto n = std::make_shared<Node>();
    n->v = Node::PowerOp{std::move(base), std::move(exponent)};
    return Expr(std::move(n));
}

Expr Expr::log(Expr argument) {
    if (argument.is_one_constant()) return constant(Rational(0));
    auto n = std::make_shared<Node>();
    n->v = Node::LogOp{std::move(argument)};
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const {
    switch (node_->v.index()) {
    case 0: return Kind::Constant;
    case 1: return Kind::Atomic;
    case 2: return Kind::Sum;
    case 3: return Kind::Product;
    case 4: return Kind::Power;
    default: return Kind::Log;
    }
}

bool Expr::is_zero_constant() const {
    return kind() == Kind::Constant && constant_value().is_zero();
}

bool Expr::is_one_constant() const {
    return kind() == Kind::Constant && constant_value().is_one();
}

const Rational& Expr::constant_value() const { return std::get<Rational>(node_->v); }
const Atom& Expr::atom_value() const { return std::get<Atom>(node_->v); }

const std::vector<Expr>& Expr::operands() const {
    if (kind() == Kind::Sum) return std::get<Node::SumOp>(node_->v).terms;
    return std::get<Node::ProductOp>(node_->v).factors;
}

const Expr& Expr::base() const { return std::get<Node::PowerOp>(node_->v).base; }
const Rational& Expr::exponent() const { return std::get<Node::PowerOp>(node_->v).exponent; }
const Expr& Expr::log_argument() const { return std::get<Node::LogOp>(node_->v).argument; }

bool Expr::same_structure(const Expr& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
    case Kind::Constant: return constant_value() == o.constant_value();
    case Kind::Atomic: return atom_value() == o.atom_value();
    case Kind::Sum:
    case Kind::Product: {
        const auto& a = operands();
        const auto& b = o.operands();
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].same_structure(b[i])) return false;
        return true;
    }
    case Kind::Power:
        return exponent() == o.exponent() && base().same_structure(o.base());
    case Kind::Log:
        return log_argument().same_structure(o.log_argument());
    }
    return false;
}

void Expr::for_each_atom(const std::function<void(const Atom&)>& fn) const {
    switch (kind()) {
    case Kind::Constant: return;
    case Kind::Atomic: fn(atom_value()); return;
    case Kind::Sum:
    case Kind::Product:
        for (const auto& e : operands()) e.for_each_atom(fn);
        return;
    case Kind::Power: base().for_each_atom(fn); return;
    case Kind::Log: log_argument().for_each_atom(fn); return;
    }
}

bool Expr::contains_atom(const Atom& a) const {
    bool found = false;
    for_each_atom([&](const Atom& b) { if (b == a) found = true; });
    return found;
}

Expr operator-(const Expr& a, const Expr& b) {
    return Expr::sum({a, -b});
}

Expr operator/(const Expr& a, const Expr& b) {
    return Expr::product({a, Expr::pow(b, Rational(-1))});
}

Expr Expr::operator-() const {
    return product({constant(Rational(-1)), *this});
}

Expr substitute(const Expr& e, const std::map<Atom, Expr>& bindings) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return e;
    case Expr::Kind::Atomic: {
        auto it = bindings.find(e.atom_value());
        return it == bindings.end() ? e : it->second;
    }
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
        std::vector<Expr> parts;
        parts.reserve(e.operands().size());
        for (const auto& op : e.operands()) parts.push_back(substitute(op, bindings));
        return e.kind() == Expr::Kind::Sum ? Expr::sum(std::move(parts))
                                           : Expr::product(std::move(parts));
    }
    case Expr::Kind::Power:
        return Expr::pow(substitute(e.base(), bindings), e.exponent());
    case Expr::Kind::Log:
        return Expr::log(substitute(e.log_argument(), bindings));
    }
    throw Error(ErrorKind::Internal, "unreachable expr kind");
}

Expr partial(const Expr& e, const Atom& v) {
    if (v.is_func_deriv())
        throw Error(ErrorKind::DomainError,
                    "partial derivatives are taken with respect to coordinates, not functions");
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return Expr::integer(0);
    case Expr::Kind::Atomic:
        return e.atom_value() == v ? Expr::integer(1) : Expr::integer(0);
    case Expr::Kind::Sum: {
        std::vector<Expr> parts;
        for (const auto& t : e.operands()) parts.push_back(partial(t, v));
        return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Product: {
        const auto& fs = e.operands();
        std::vector<Expr> terms;
        for (size_t i = 0; i < fs.size(); ++i) {
            std::vector<Expr> factors;
            factors.reserve(fs.size());
            for (size_t k = 0; k < fs.size(); ++k)
                factors.push_back(k == i ? partial(fs[k], v) : fs[k]);
            terms.push_back(Expr::product(std::move(factors)));
        }
        return Expr::sum(std::move(terms));
    }
    case Expr::Kind::Power: {
        // d(b^r) = r * b^(r-1) * db
        const Rational& r = e.exponent();
        return Expr::product({Expr::constant(r),
                              Expr::pow(e.base(), r - Rational(1)),
                              partial(e.base(), v)});
    }
    case Expr::Kind::Log:
        return Expr::product({partial(e.log_argument(), v),
                              Expr::pow(e.log_argument(), Rational(-1))});
    }
    throw Error(ErrorKind::Internal, "unreachable expr kind");
}

} // namespace jetcm
