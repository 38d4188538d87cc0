#pragma once

#include "jetcm/expr.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace jetcm {

class NormalForm;
using NormalFormPtr = std::shared_ptr<const NormalForm>;

/// A multiplicative generator of a monomial: a coordinate atom, an opaque
/// logarithm (argument kept in normal form), or the base of a power whose
/// radicand/denominator is a multi-term polynomial.  A Base kernel is stored
/// monic (leading coefficient 1) whenever the constant part can be split off
/// exactly.
class Kernel {
public:
    enum class Kind { Atom, Log, Base };

    static Kernel from_atom(Atom a);
    static Kernel log(NormalFormPtr argument);
    static Kernel base(NormalFormPtr polynomial);

    Kind kind() const { return kind_; }
    const Atom& atom() const { return atom_; }
    const NormalForm& inner() const { return *inner_; }
    const NormalFormPtr& inner_ptr() const { return inner_; }

    bool operator==(const Kernel& o) const;
    std::strong_ordering operator<=>(const Kernel& o) const;

private:
    Kind kind_ = Kind::Atom;
    Atom atom_;
    NormalFormPtr inner_;
};

/// Product of kernel powers with nonzero rational exponents, kept sorted by
/// kernel.  Base kernels additionally keep their exponent either negative or
/// in (0,1): any positive integer part is expanded back into the polynomial.
class Monomial {
public:
    Monomial() = default;

    const std::vector<std::pair<Kernel, Rational>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    bool operator==(const Monomial& o) const;
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    friend class NormalForm;
    friend NormalForm term_product(const Monomial&, const Rational&,
                                   const Monomial&, const Rational&);
    friend NormalForm clear_denominators(const NormalForm&);
    std::vector<std::pair<Kernel, Rational>> factors_;
};

/// Canonical form: a finite map monomial -> nonzero rational coefficient.
/// The zero expression is the empty map.
class NormalForm {
public:
    using TermMap = std::map<Monomial, Rational>;

    NormalForm() = default;
    static NormalForm from_constant(Rational c);
    static NormalForm from_atom(Atom a);
    /// Single term c * m; the factor list may violate the Base-kernel
    /// exponent invariant, which is restored (expanding as needed).
    static NormalForm from_term(std::vector<std::pair<Kernel, Rational>> factors, Rational c);

    const TermMap& terms() const { return terms_; }
    bool is_literal_zero() const { return terms_.empty(); }
    std::optional<Rational> as_constant() const;

    bool operator==(const NormalForm& o) const;
    std::strong_ordering operator<=>(const NormalForm& o) const;

private:
    friend NormalForm nf_add(const NormalForm&, const NormalForm&);
    friend NormalForm nf_scale(const NormalForm&, const Rational&);
    friend NormalForm term_product(const Monomial&, const Rational&,
                                   const Monomial&, const Rational&);
    friend NormalForm nf_mul(const NormalForm&, const NormalForm&);
    friend NormalForm nf_pow(const NormalForm&, const Rational&);
    friend NormalForm clear_denominators(const NormalForm&);
    TermMap terms_;
};

NormalForm nf_add(const NormalForm& a, const NormalForm& b);
NormalForm nf_neg(const NormalForm& a);
NormalForm nf_sub(const NormalForm& a, const NormalForm& b);
NormalForm nf_scale(const NormalForm& a, const Rational& c);
NormalForm nf_mul(const NormalForm& a, const NormalForm& b);
NormalForm nf_pow_int(const NormalForm& a, long long k); // k >= 1
NormalForm nf_pow(const NormalForm& a, const Rational& r);

/// Multiplies through by enough positive powers of every Base kernel that
/// appears in a denominator.  Value changes by a nonzero factor, so the
/// result is zero iff the input is.
NormalForm clear_denominators(const NormalForm& a);

/// Semantic zero test: literal zero after denominator clearing.
bool nf_is_zero(const NormalForm& a);

/// Visits every atom, descending into log and base kernels.
void nf_for_each_atom(const NormalForm& a, const std::function<void(const Atom&)>& fn);

NormalForm normalize(const Expr& e);
Expr denormalize(const NormalForm& nf);

/// Canonical representative of e's equivalence class.
Expr canonical(const Expr& e);

bool is_zero(const Expr& e);
bool equal(const Expr& a, const Expr& b);

/// Writes e as sum over exponent vectors of the given atoms:
///   e = sum coeff(v) * prod vars[k]^(v[k])
/// Throws NotPolynomial when a listed atom occurs with a negative or
/// fractional exponent, or inside a log/base kernel.
std::map<std::vector<int>, Expr> collect(const Expr& e, const std::vector<Atom>& vars);

} // namespace jetcm
