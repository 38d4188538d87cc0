#pragma once

#include "jetcm/atom.hpp"
#include "jetcm/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace jetcm {

/// Immutable exact symbolic expression over jet coordinates, parameters and
/// unknown functions.  Construction goes through the factory functions, which
/// maintain the structural invariants:
///   - Sum/Product operand lists have length >= 2 and are flattened,
///   - constants inside sums/products are folded (a product keeps its folded
///     constant as the first operand),
///   - a Power never has exponent 0 or 1 and never a Power as its base.
/// Subtrees are shared; sharing is semantically invisible.
class Expr {
public:
    enum class Kind { Constant, Atomic, Sum, Product, Power, Log };

    Expr() : Expr(constant(Rational(0))) {}

    static Expr constant(Rational c);
    static Expr integer(long long v) { return constant(Rational(v)); }
    static Expr atom(Atom a);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr pow(Expr base, Rational exponent);
    static Expr log(Expr argument);

    Kind kind() const;
    bool is_constant() const { return kind() == Kind::Constant; }
    bool is_atomic() const { return kind() == Kind::Atomic; }
    bool is_zero_constant() const;
    bool is_one_constant() const;

    const Rational& constant_value() const;
    const Atom& atom_value() const;
    const std::vector<Expr>& operands() const; // Sum / Product
    const Expr& base() const;                  // Power
    const Rational& exponent() const;          // Power
    const Expr& log_argument() const;          // Log

    /// Structural identity (same tree shape); semantic equality lives in
    /// normal_form.hpp.
    bool same_structure(const Expr& o) const;

    /// Visits every atom occurrence (including inside powers and logs).
    void for_each_atom(const std::function<void(const Atom&)>& fn) const;
    bool contains_atom(const Atom& a) const;

    friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr operator-() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Simultaneous substitution of atoms by expressions; unbound atoms are kept.
Expr substitute(const Expr& e, const std::map<Atom, Expr>& bindings);

/// Formal partial derivative: every atom other than `v` is a constant, and
/// FuncDeriv atoms are opaque (they respond only to total derivatives).
/// `v` must be Independent, Dependent or Parameter.
Expr partial(const Expr& e, const Atom& v);

} // namespace jetcm
