#pragma once

#include "w3f/scalars.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace w3f {

// Dense univariate polynomial over Q(sqrt(-3)); coefficients low to high, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<QuadScalar> coeffs);
    UniPoly(const QuadScalar& c) : UniPoly(std::vector<QuadScalar>{c}) {}

    static UniPoly x() { return UniPoly({QuadScalar(0), QuadScalar(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<QuadScalar>& coeffs() const { return c_; }
    QuadScalar coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : QuadScalar(); }
    const QuadScalar& lead() const { return c_.back(); }

    QuadScalar eval(const QuadScalar& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly conj() const;

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

    // p = q*div + rem with deg rem < deg div.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& div);
    // Monic gcd; gcd(0, 0) = 0.
    static UniPoly gcd(UniPoly p, UniPoly q);
    // Unique polynomial of degree < n through n points with distinct abscissae.
    static UniPoly interpolate(std::span<const QuadScalar> xs, std::span<const QuadScalar> ys);

private:
    std::vector<QuadScalar> c_;
    void trim();
};

// Sparse polynomial over Q(sqrt(-3)) in up to four variables x0..x3.
class MultiPoly {
public:
    static constexpr int kVars = 4;
    using Exponent = std::array<std::uint8_t, kVars>;

    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(QuadScalar(c)) {}
    MultiPoly(const QuadScalar& c);

    static MultiPoly var(int i);

    bool is_zero() const { return t_.empty(); }
    const std::map<Exponent, QuadScalar>& terms() const { return t_; }
    QuadScalar coeff(const Exponent& e) const;
    int degree_in(int var) const;
    int total_degree() const;

    QuadScalar eval(std::span<const QuadScalar> values) const;
    // Substitutes x_var = value.
    MultiPoly substitute(int var, const QuadScalar& value) const;
    // Coefficients of var^0, var^1, ... as polynomials in the remaining variables.
    std::vector<MultiPoly> coeffs_in(int var) const;
    // Requires every variable other than var to be absent.
    UniPoly to_uni(int var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return p.t_ == q.t_; }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    std::string to_string(std::span<const std::string> names) const;

private:
    std::map<Exponent, QuadScalar> t_;
};

inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }
inline bool is_zero(const MultiPoly& x) { return x.is_zero(); }

}  // namespace w3f
