#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace jetcm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational.  Always stored in lowest terms with a
/// positive denominator (boost's cpp_rational maintains that canonical form).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    static Rational from_decimal_string(const std::string& digits);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_negative() const { return value_ < 0; }
    bool is_integer() const { return denominator() == 1; }
    /// Integer value; only valid when is_integer() and it fits in long long.
    long long as_integer() const;

    Rational operator-() const { return Rational(-value_); }
    Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
    Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
    Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        if (value_ < o.value_) return std::strong_ordering::less;
        if (value_ > o.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Integer power; throws DivisionByZero on 0^negative.
    Rational pow_integer(long long e) const;

    Rational abs() const { return is_negative() ? -*this : *this; }

    /// floor of the rational value.
    BigInt floor() const;

    double to_double() const;

    /// "3", "-3/4".
    std::string str() const;

private:
    boost::multiprecision::cpp_rational value_;
};

/// Exact k-th root of a non-negative integer, if one exists.
std::optional<BigInt> exact_integer_root(const BigInt& v, unsigned k);

/// base^exp as an exact rational, if the value is rational.
/// Handles negative bases when the exponent has an odd denominator.
std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& exp);

} // namespace jetcm
