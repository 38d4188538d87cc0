#include "jetcm/normal_form.hpp"

#include "jetcm/error.hpp"

#include <algorithm>

namespace jetcm {

Kernel Kernel::from_atom(Atom a) {
    Kernel k;
    k.kind_ = Kind::Atom;
    k.atom_ = std::move(a);
    return k;
}

Kernel Kernel::log(NormalFormPtr argument) {
    Kernel k;
    k.kind_ = Kind::Log;
    k.inner_ = std::move(argument);
    return k;
}

Kernel Kernel::base(NormalFormPtr polynomial) {
    Kernel k;
    k.kind_ = Kind::Base;
    k.inner_ = std::move(polynomial);
    return k;
}

bool Kernel::operator==(const Kernel& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Kernel::operator<=>(const Kernel& o) const {
    if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
    if (kind_ == Kind::Atom) return atom_ <=> o.atom_;
    if (inner_ == o.inner_) return std::strong_ordering::equal; // shared subtree
    return *inner_ <=> *o.inner_;
}

bool Monomial::operator==(const Monomial& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        if (auto c = factors_[i].first <=> o.factors_[j].first; c != 0) return c;
        if (auto c = factors_[i].second <=> o.factors_[j].second; c != 0) return c;
        ++i, ++j;
    }
    return factors_.size() <=> o.factors_.size();
}

NormalForm NormalForm::from_constant(Rational c) {
    NormalForm nf;
    if (!c.is_zero()) nf.terms_[Monomial()] = std::move(c);
    return nf;
}

NormalForm NormalForm::from_atom(Atom a) {
    Monomial m;
    m.factors_.emplace_back(Kernel::from_atom(std::move(a)), Rational(1));
    NormalForm nf;
    nf.terms_[std::move(m)] = Rational(1);
    return nf;
}

std::optional<Rational> NormalForm::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
    return std::nullopt;
}

bool NormalForm::operator==(const NormalForm& o) const {
    return terms_ == o.terms_;
}

std::strong_ordering NormalForm::operator<=>(const NormalForm& o) const {
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (auto c = i->first <=> j->first; c != 0) return c;
        if (auto c = i->second <=> j->second; c != 0) return c;
        ++i, ++j;
    }
    if (i != terms_.end()) return std::strong_ordering::greater;
    if (j != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

NormalForm nf_add(const NormalForm& a, const NormalForm& b) {
    NormalForm out = a;
    for (const auto& [m, c] : b.terms_) {
        auto it = out.terms_.find(m);
        if (it == out.terms_.end()) {
            out.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

NormalForm nf_neg(const NormalForm& a) { return nf_scale(a, Rational(-1)); }

NormalForm nf_sub(const NormalForm& a, const NormalForm& b) { return nf_add(a, nf_neg(b)); }

NormalForm nf_scale(const NormalForm& a, const Rational& c) {
    NormalForm out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : a.terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

/// Multiplies two single terms.  Exponents of equal kernels add and cancel;
/// any Base kernel whose resulting exponent has a positive integer part gets
/// that part expanded back into its polynomial, which is what makes
/// (p)^(-1) * p collapse to 1 during denominator clearing.
NormalForm term_product(const Monomial& m1, const Rational& c1,
                        const Monomial& m2, const Rational& c2) {
    std::vector<std::pair<Kernel, Rational>> merged;
    merged.reserve(m1.factors_.size() + m2.factors_.size());
    size_t i = 0, j = 0;
    while (i < m1.factors_.size() || j < m2.factors_.size()) {
        if (j == m2.factors_.size() ||
            (i < m1.factors_.size() && m1.factors_[i].first < m2.factors_[j].first)) {
            merged.push_back(m1.factors_[i++]);
        } else if (i == m1.factors_.size() || m2.factors_[j].first < m1.factors_[i].first) {
            merged.push_back(m2.factors_[j++]);
        } else {
            Rational e = m1.factors_[i].second + m2.factors_[j].second;
            if (!e.is_zero()) merged.emplace_back(m1.factors_[i].first, std::move(e));
            ++i, ++j;
        }
    }
    return NormalForm::from_term(std::move(merged), c1 * c2);
}

NormalForm NormalForm::from_term(std::vector<std::pair<Kernel, Rational>> factors, Rational c) {
    NormalForm out;
    if (c.is_zero()) return out;
    std::stable_sort(factors.begin(), factors.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal kernels (callers may pass duplicates)
    std::vector<std::pair<Kernel, Rational>> unique;
    for (auto& f : factors) {
        if (!unique.empty() && unique.back().first == f.first) {
            unique.back().second += f.second;
        } else {
            unique.push_back(std::move(f));
        }
    }
    std::vector<std::pair<Kernel, Rational>> kept;
    std::vector<std::pair<NormalFormPtr, long long>> expansions;
    for (auto& [k, e] : unique) {
        if (e.is_zero()) continue;
        if (k.kind() == Kernel::Kind::Base && !e.is_negative()) {
            BigInt ip = e.floor();
            Rational frac = e - Rational(BigInt(ip), BigInt(1));
            if (ip > 0) expansions.emplace_back(k.inner_ptr(), ip.convert_to<long long>());
            if (!frac.is_zero()) kept.emplace_back(k, std::move(frac));
        } else {
            kept.emplace_back(k, std::move(e));
        }
    }
    Monomial m;
    m.factors_ = std::move(kept);
    out.terms_.emplace(std::move(m), std::move(c));
    for (const auto& [poly, k] : expansions) out = nf_mul(out, nf_pow_int(*poly, k));
    return out;
}

NormalForm nf_mul(const NormalForm& a, const NormalForm& b) {
    NormalForm out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out = nf_add(out, term_product(ma, ca, mb, cb));
    return out;
}

NormalForm nf_pow_int(const NormalForm& a, long long k) {
    if (k < 1) throw Error(ErrorKind::Internal, "nf_pow_int expects k >= 1");
    NormalForm result = NormalForm::from_constant(Rational(1));
    NormalForm base = a;
    while (k > 0) {
        if (k & 1) result = nf_mul(result, base);
        k >>= 1;
        if (k > 0) base = nf_mul(base, base);
    }
    return result;
}

NormalForm nf_pow(const NormalForm& a, const Rational& r) {
    if (r.is_zero()) return NormalForm::from_constant(Rational(1));
    if (r.is_one()) return a;
    if (a.is_literal_zero()) {
        if (r.is_negative())
            throw Error(ErrorKind::DivisionByZero, "negative power of a zero expression");
        return NormalForm();
    }
    if (a.terms_.size() == 1) {
        const auto& [m, c] = *a.terms_.begin();
        auto cr = rational_pow_exact(c, r);
        if (!cr)
            throw Error(ErrorKind::Unsupported,
                        "power " + r.str() + " of constant " + c.str() + " is not rational");
        std::vector<std::pair<Kernel, Rational>> factors;
        factors.reserve(m.factors().size());
        for (const auto& [k, e] : m.factors()) factors.emplace_back(k, e * r);
        return NormalForm::from_term(std::move(factors), *cr);
    }
    if (r.is_integer() && !r.is_negative()) return nf_pow_int(a, r.as_integer());
    // Multi-term base raised to a negative or fractional power: introduce a
    // Base kernel.  A semantically-zero base is a division by zero (or just
    // zero, for positive exponents).
    if (nf_is_zero(a)) {
        if (r.is_negative())
            throw Error(ErrorKind::DivisionByZero, "negative power of a zero expression");
        return NormalForm();
    }
    Rational lead = a.terms_.rbegin()->second;
    Rational coeff(1);
    NormalForm poly = a;
    if (auto lp = rational_pow_exact(lead, r)) {
        coeff = *lp;
        poly = nf_scale(a, Rational(1) / lead);
    }
    Kernel k = Kernel::base(std::make_shared<const NormalForm>(std::move(poly)));
    if (!r.is_integer() && !r.is_negative() && r > Rational(1)) {
        BigInt ip = r.floor();
        Rational frac = r - Rational(ip, BigInt(1));
        NormalForm head = NormalForm::from_term({{k, frac}}, coeff);
        return nf_mul(head, nf_pow_int(k.inner(), ip.convert_to<long long>()));
    }
    return NormalForm::from_term({{k, r}}, coeff);
}

NormalForm clear_denominators(const NormalForm& a) {
    NormalForm cur = a;
    for (int round = 0; round < 64; ++round) {
        std::map<Kernel, BigInt> lift;
        for (const auto& [m, c] : cur.terms_) {
            for (const auto& [k, e] : m.factors()) {
                if (k.kind() != Kernel::Kind::Base || !e.is_negative()) continue;
                BigInt need = (-e).floor();
                if (Rational(need, BigInt(1)) < -e) need += 1; // ceil
                auto it = lift.find(k);
                if (it == lift.end() || it->second < need) lift[k] = need;
            }
        }
        if (lift.empty()) return cur;
        Monomial mult;
        for (const auto& [k, need] : lift)
            mult.factors_.emplace_back(k, Rational(need, BigInt(1)));
        NormalForm next;
        for (const auto& [m, c] : cur.terms_)
            next = nf_add(next, term_product(m, c, mult, Rational(1)));
        cur = std::move(next);
        if (cur.is_literal_zero()) return cur;
    }
    throw Error(ErrorKind::Internal, "denominator clearing did not terminate");
}

bool nf_is_zero(const NormalForm& a) {
    if (a.is_literal_zero()) return true;
    bool has_base = false;
    for (const auto& [m, c] : a.terms())
        for (const auto& [k, e] : m.factors())
            if (k.kind() == Kernel::Kind::Base && e.is_negative()) has_base = true;
    if (!has_base) return false;
    return clear_denominators(a).is_literal_zero();
}

void nf_for_each_atom(const NormalForm& a, const std::function<void(const Atom&)>& fn) {
    for (const auto& [m, c] : a.terms())
        for (const auto& [k, e] : m.factors()) {
            if (k.kind() == Kernel::Kind::Atom) fn(k.atom());
            else nf_for_each_atom(k.inner(), fn);
        }
}

NormalForm normalize(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return NormalForm::from_constant(e.constant_value());
    case Expr::Kind::Atomic:
        return NormalForm::from_atom(e.atom_value());
    case Expr::Kind::Sum: {
        NormalForm out;
        for (const auto& t : e.operands()) out = nf_add(out, normalize(t));
        return out;
    }
    case Expr::Kind::Product: {
        NormalForm out = NormalForm::from_constant(Rational(1));
        for (const auto& f : e.operands()) out = nf_mul(out, normalize(f));
        return out;
    }
    case Expr::Kind::Power:
        return nf_pow(normalize(e.base()), e.exponent());
    case Expr::Kind::Log: {
        NormalForm arg = normalize(e.log_argument());
        if (nf_is_zero(arg))
            throw Error(ErrorKind::DomainError, "log of a zero expression");
        if (auto c = arg.as_constant(); c && c->is_one()) return NormalForm();
        Kernel k = Kernel::log(std::make_shared<const NormalForm>(std::move(arg)));
        return NormalForm::from_term({{k, Rational(1)}}, Rational(1));
    }
    }
    throw Error(ErrorKind::Internal, "unreachable expr kind");
}

namespace {

Expr kernel_to_expr(const Kernel& k) {
    switch (k.kind()) {
    case Kernel::Kind::Atom: return Expr::atom(k.atom());
    case Kernel::Kind::Log: return Expr::log(denormalize(k.inner()));
    case Kernel::Kind::Base: return denormalize(k.inner());
    }
    throw Error(ErrorKind::Internal, "unreachable kernel kind");
}

bool kernel_contains(const Kernel& k, const std::vector<Atom>& vars);

bool nf_contains(const NormalForm& nf, const std::vector<Atom>& vars) {
    for (const auto& [m, c] : nf.terms())
        for (const auto& [k, e] : m.factors())
            if (kernel_contains(k, vars)) return true;
    return false;
}

bool kernel_contains(const Kernel& k, const std::vector<Atom>& vars) {
    if (k.kind() == Kernel::Kind::Atom)
        return std::find(vars.begin(), vars.end(), k.atom()) != vars.end();
    return nf_contains(k.inner(), vars);
}

} // namespace

Expr denormalize(const NormalForm& nf) {
    std::vector<Expr> terms;
    terms.reserve(nf.terms().size());
    for (const auto& [m, c] : nf.terms()) {
        std::vector<Expr> factors;
        factors.reserve(m.factors().size() + 1);
        factors.push_back(Expr::constant(c));
        for (const auto& [k, e] : m.factors())
            factors.push_back(Expr::pow(kernel_to_expr(k), e));
        terms.push_back(Expr::product(std::move(factors)));
    }
    return Expr::sum(std::move(terms));
}

Expr canonical(const Expr& e) { return denormalize(normalize(e)); }

bool is_zero(const Expr& e) { return nf_is_zero(normalize(e)); }

bool equal(const Expr& a, const Expr& b) { return is_zero(a - b); }

std::map<std::vector<int>, Expr> collect(const Expr& e, const std::vector<Atom>& vars) {
    NormalForm nf = normalize(e);
    std::map<std::vector<int>, NormalForm> buckets;
    for (const auto& [m, c] : nf.terms()) {
        std::vector<int> expo(vars.size(), 0);
        std::vector<std::pair<Kernel, Rational>> rest;
        for (const auto& [k, ex] : m.factors()) {
            int vi = -1;
            if (k.kind() == Kernel::Kind::Atom) {
                auto it = std::find(vars.begin(), vars.end(), k.atom());
                if (it != vars.end()) vi = static_cast<int>(it - vars.begin());
            }
            if (vi >= 0) {
                if (!ex.is_integer() || ex.is_negative())
                    throw Error(ErrorKind::NotPolynomial,
                                "collected atom occurs with exponent " + ex.str());
                expo[static_cast<size_t>(vi)] = static_cast<int>(ex.as_integer());
            } else {
                if (kernel_contains(k, vars))
                    throw Error(ErrorKind::NotPolynomial,
                                "collected atom occurs inside a log or denominator");
                rest.emplace_back(k, ex);
            }
        }
        NormalForm term = NormalForm::from_term(std::move(rest), c);
        auto it = buckets.find(expo);
        if (it == buckets.end()) buckets.emplace(std::move(expo), std::move(term));
        else it->second = nf_add(it->second, term);
    }
    std::map<std::vector<int>, Expr> out;
    for (auto& [expo, b] : buckets)
        if (!b.is_literal_zero()) out.emplace(expo, denormalize(b));
    return out;
}

} // namespace jetcm
