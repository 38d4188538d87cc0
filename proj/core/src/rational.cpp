#include "jetcm/rational.hpp"

#include "jetcm/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace jetcm {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    value_ = mp::cpp_rational(BigInt(num), BigInt(den));
}

Rational::Rational(BigInt num, BigInt den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    value_ = mp::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::from_decimal_string(const std::string& digits) {
    return Rational(mp::cpp_rational(BigInt(digits)));
}

long long Rational::as_integer() const {
    return numerator().convert_to<long long>();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
    return Rational(value_ / o.value_);
}

Rational Rational::pow_integer(long long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
        return Rational(0);
    }
    const unsigned long long mag = e < 0 ? static_cast<unsigned long long>(-e)
                                         : static_cast<unsigned long long>(e);
    BigInt n = mp::pow(numerator(), static_cast<unsigned>(mag));
    BigInt d = mp::pow(denominator(), static_cast<unsigned>(mag));
    if (e < 0) std::swap(n, d);
    return Rational(std::move(n), std::move(d));
}

BigInt Rational::floor() const {
    BigInt q = numerator() / denominator();
    if (value_ < 0 && q * denominator() != numerator()) q -= 1;
    return q;
}

double Rational::to_double() const {
    return value_.convert_to<double>();
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

std::optional<BigInt> exact_integer_root(const BigInt& v, unsigned k) {
    if (v < 0) return std::nullopt;
    if (k == 0) return std::nullopt;
    if (k == 1 || v == 0 || v == 1) return v;
    // Binary search bounded by the bit length.
    const unsigned bits = mp::msb(v) + 1;
    BigInt lo = 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo <= hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt p = mp::pow(mid, k);
        if (p == v) return mid;
        if (p < v) lo = mid + 1;
        else hi = mid - 1;
    }
    return std::nullopt;
}

std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& exp) {
    if (exp.is_integer()) return base.pow_integer(exp.as_integer());
    if (base.is_zero()) {
        if (exp.is_negative())
            throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
        return Rational(0);
    }
    const BigInt den = exp.denominator();
    if (den > 64) return std::nullopt; // roots this deep never come up
    const unsigned k = den.convert_to<unsigned>();
    bool negate = false;
    Rational b = base;
    if (b.is_negative()) {
        if (k % 2 == 0) return std::nullopt; // no rational even root of a negative
        b = -b;
        negate = true;
    }
    auto rn = exact_integer_root(b.numerator(), k);
    auto rd = exact_integer_root(b.denominator(), k);
    if (!rn || !rd) return std::nullopt;
    Rational root(*rn, *rd);
    if (negate) root = -root;
    // exp = p/k with gcd(p, k) = 1; the result is root^p.
    Rational result = root.pow_integer(exp.numerator().convert_to<long long>());
    return result;
}

} // namespace jetcm
