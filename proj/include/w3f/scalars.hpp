#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace w3f {

// Canonical (reduced, positive denominator) arbitrary-precision rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// a + b*sqrt(-3). Zero iff a = b = 0.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(long a) : a_(a) {}
    QuadScalar(Rational a) : a_(std::move(a)) {}
    QuadScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadScalar s3() { return QuadScalar(0, 1); }

    const Rational& re() const { return a_; }
    const Rational& s3_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadScalar conj() const { return {a_, -b_}; }
    Rational norm() const { return a_ * a_ + 3 * b_ * b_; }
    QuadScalar inv() const;

    QuadScalar& operator+=(const QuadScalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadScalar& operator-=(const QuadScalar& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o) { return *this *= o.inv(); }

    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
    friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
    QuadScalar operator-() const { return {-a_, -b_}; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

private:
    Rational a_{0};
    Rational b_{0};
};

QuadScalar add(const QuadScalar& x, const QuadScalar& y);
QuadScalar mul(const QuadScalar& x, const QuadScalar& y);
QuadScalar inv(const QuadScalar& x);

// Renders "p/q + (r/s)*s3"; parts that are zero are omitted.
std::string to_string(const QuadScalar& x);

// Accepts "p/q", "(r/s)*s3", "p/q + (r/s)*s3", "r*s3", "s3", with optional signs.
QuadScalar parse_scalar(std::string_view text);

}  // namespace w3f
