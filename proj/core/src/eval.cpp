#include "jetcm/eval.hpp"

#include "jetcm/error.hpp"

#include <cmath>
#include <sstream>

namespace jetcm {

bool numeric_is_exact(const NumericValue& v) {
    return std::holds_alternative<Rational>(v);
}

double numeric_to_double(const NumericValue& v) {
    if (auto* r = std::get_if<Rational>(&v)) return r->to_double();
    return std::get<double>(v);
}

std::string numeric_str(const NumericValue& v) {
    if (auto* r = std::get_if<Rational>(&v)) return r->str();
    std::ostringstream os;
    os.precision(12);
    os << std::get<double>(v);
    return os.str();
}

namespace {

NumericValue num_add(const NumericValue& a, const NumericValue& b) {
    if (numeric_is_exact(a) && numeric_is_exact(b))
        return std::get<Rational>(a) + std::get<Rational>(b);
    return numeric_to_double(a) + numeric_to_double(b);
}

NumericValue num_mul(const NumericValue& a, const NumericValue& b) {
    if (numeric_is_exact(a) && numeric_is_exact(b))
        return std::get<Rational>(a) * std::get<Rational>(b);
    return numeric_to_double(a) * numeric_to_double(b);
}

NumericValue num_pow(const NumericValue& base, const Rational& exp) {
    if (numeric_is_exact(base)) {
        const Rational& b = std::get<Rational>(base);
        if (b.is_zero()) {
            if (exp.is_negative())
                throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
            return Rational(0);
        }
        if (exp.is_integer()) return b.pow_integer(exp.as_integer());
        if (b.is_negative())
            throw Error(ErrorKind::DomainError,
                        "fractional power of a negative value " + b.str());
        if (auto exact = rational_pow_exact(b, exp)) return *exact;
        return std::pow(b.to_double(), exp.to_double());
    }
    double b = std::get<double>(base);
    if (b == 0.0 && exp.is_negative())
        throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
    if (b < 0.0 && !exp.is_integer())
        throw Error(ErrorKind::DomainError, "fractional power of a negative value");
    return std::pow(b, exp.to_double());
}

} // namespace

NumericValue eval_numeric(const Expr& e, const std::map<Atom, Rational>& assignment) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return e.constant_value();
    case Expr::Kind::Atomic: {
        auto it = assignment.find(e.atom_value());
        if (it == assignment.end())
            throw Error(ErrorKind::DomainError, "unassigned atom in numeric evaluation");
        return it->second;
    }
    case Expr::Kind::Sum: {
        NumericValue acc = Rational(0);
        for (const auto& t : e.operands()) acc = num_add(acc, eval_numeric(t, assignment));
        return acc;
    }
    case Expr::Kind::Product: {
        NumericValue acc = Rational(1);
        for (const auto& f : e.operands()) acc = num_mul(acc, eval_numeric(f, assignment));
        return acc;
    }
    case Expr::Kind::Power:
        return num_pow(eval_numeric(e.base(), assignment), e.exponent());
    case Expr::Kind::Log: {
        NumericValue arg = eval_numeric(e.log_argument(), assignment);
        if (numeric_is_exact(arg)) {
            const Rational& r = std::get<Rational>(arg);
            if (!(Rational(0) < r))
                throw Error(ErrorKind::DomainError, "log of a non-positive value " + r.str());
            if (r.is_one()) return Rational(0);
            return std::log(r.to_double());
        }
        double d = std::get<double>(arg);
        if (d <= 0.0) throw Error(ErrorKind::DomainError, "log of a non-positive value");
        return std::log(d);
    }
    }
    throw Error(ErrorKind::Internal, "unreachable expr kind");
}

} // namespace jetcm
