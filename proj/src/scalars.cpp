#include "w3f/scalars.hpp"

#include <cctype>

namespace w3f {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

QuadScalar QuadScalar::inv() const {
    Rational n = norm();
    if (sgn(n) == 0) throw DivisionByZero();
    return {a_ / n, -b_ / n};
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    Rational a = a_ * o.a_ - 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadScalar add(const QuadScalar& x, const QuadScalar& y) { return x + y; }
QuadScalar mul(const QuadScalar& x, const QuadScalar& y) { return x * y; }
QuadScalar inv(const QuadScalar& x) { return x.inv(); }

std::string to_string(const QuadScalar& x) {
    const Rational& a = x.re();
    const Rational& b = x.s3_part();
    if (sgn(b) == 0) return a.get_str();
    Rational mag = abs(b);
    std::string bpart = mag.get_den() == 1 ? (mag == 1 ? "s3" : mag.get_str() + "*s3")
                                           : "(" + mag.get_str() + ")*s3";
    if (sgn(a) == 0) return (sgn(b) < 0 ? "-" : "") + bpart;
    return a.get_str() + (sgn(b) < 0 ? " - " : " + ") + bpart;
}

namespace {

// expr := ['+'|'-'] prod (('+'|'-') prod)* ; prod := atom (('*'|'/') atom)*
// atom := integer | 's3' | '(' expr ')'
class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    QuadScalar parse() {
        QuadScalar v = expr();
        skip();
        if (i_ != s_.size()) throw ParseError("unexpected character in scalar", i_);
        return v;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    QuadScalar expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        QuadScalar v = prod();
        if (neg) v = -v;
        for (;;) {
            if (eat('+')) v += prod();
            else if (eat('-')) v -= prod();
            else return v;
        }
    }

    QuadScalar prod() {
        QuadScalar v = atom();
        for (;;) {
            if (eat('*')) v *= atom();
            else if (eat('/')) {
                std::size_t at = i_;
                QuadScalar d = atom();
                if (d.is_zero()) throw ParseError("division by zero in scalar", at);
                v /= d;
            } else return v;
        }
    }

    QuadScalar atom() {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of scalar", i_);
        if (eat('(')) {
            QuadScalar v = expr();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return v;
        }
        if (s_.substr(i_, 2) == "s3") {
            i_ += 2;
            return QuadScalar::s3();
        }
        if (eat('-')) return -atom();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected number, 's3' or '('", start);
        return QuadScalar(Rational(mpz_class(std::string(s_.substr(start, i_ - start)))));
    }
};

}  // namespace

QuadScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace w3f
