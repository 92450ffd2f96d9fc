#include "selfinv/numeric.hpp"

#include <cmath>
#include <ostream>

#include <mpfr.h>

namespace selfinv {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) {
        throw std::domain_error("cannot convert non-finite double to a rational");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rational(q);
}

Rational Rational::parse(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    if (q.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    return Rational(q);
}

double Rational::to_double() const {
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, value_.get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

GaussianRational GaussianRational::from_complex(ComplexDouble z) {
    return {Rational::from_double(z.real()), Rational::from_double(z.imag())};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational n = o.norm();
    *this *= conj(o);
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << '(' << z.re() << ", " << z.im() << ')';
}

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace selfinv
