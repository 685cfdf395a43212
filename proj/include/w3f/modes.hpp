#pragma once

#include "w3f/polynomial.hpp"
#include "w3f/scalars.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace w3f {

enum class Gen : std::uint8_t { L, J };

// L(n) has weight 2, J(n) weight 3; both lower the degree by n.
struct Mode {
    Gen gen;
    int index;
    friend bool operator==(const Mode&, const Mode&) = default;
};

std::string to_string(const Mode& m);

// L(-l[0])...L(-l[p-1]) J(-j[0])...J(-j[q-1]) w, each block weakly decreasing, parts >= 1.
struct PbwMonomial {
    std::vector<int> l;
    std::vector<int> j;

    int degree() const;
    bool empty() const { return l.empty() && j.empty(); }
    friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
};

std::string to_string(const PbwMonomial& m);

// Degree ascending, then (l, j) lexicographically descending; this is the graded_basis order.
struct GradedOrder {
    bool operator()(const PbwMonomial& a, const PbwMonomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const PbwMonomial& m) const;
};

std::vector<PbwMonomial> graded_basis(int degree);

// No stored zero coefficients.
template <class C>
class PbwVector {
public:
    using Terms = std::map<PbwMonomial, C, GradedOrder>;

    PbwVector() = default;
    static PbwVector unit(const PbwMonomial& m) {
        PbwVector v;
        v.t_.emplace(m, C(1));
        return v;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    C coeff(const PbwMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C() : it->second;
    }

    void add(const PbwMonomial& m, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_coeff(it->second)) t_.erase(it);
        }
    }

    void add_scaled(const PbwVector& o, const C& c) {
        if (is_zero_coeff(c)) return;
        for (const auto& [m, x] : o.t_) add(m, x * c);
    }

    PbwVector& operator+=(const PbwVector& o) {
        for (const auto& [m, x] : o.t_) add(m, x);
        return *this;
    }
    PbwVector& operator-=(const PbwVector& o) {
        for (const auto& [m, x] : o.t_) add(m, -x);
        return *this;
    }
    PbwVector scaled(const C& c) const {
        PbwVector out;
        out.add_scaled(*this, c);
        return out;
    }

    // -1 for the zero vector or a non-homogeneous vector.
    int homogeneous_degree() const {
        if (t_.empty()) return -1;
        int d = t_.begin()->first.degree();
        for (const auto& [m, x] : t_)
            if (m.degree() != d) return -1;
        return d;
    }
    int max_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }

    friend bool operator==(const PbwVector& a, const PbwVector& b) { return a.t_ == b.t_; }

private:
    Terms t_;
    static bool is_zero_coeff(const C& c) { return w3f::is_zero(c); }
};

template <class C, class D, class F>
PbwVector<C> map_coeffs(const PbwVector<D>& v, F f) {
    PbwVector<C> out;
    for (const auto& [m, x] : v.terms()) out.add(m, f(x));
    return out;
}

template <class C>
PbwVector<C> lift(const PbwVector<QuadScalar>& v) {
    return map_coeffs<C>(v, [](const QuadScalar& x) { return C(x); });
}

// The automorphism J(n) -> -J(n).
template <class C>
PbwVector<C> flip_j(const PbwVector<C>& v) {
    PbwVector<C> out;
    for (const auto& [m, x] : v.terms()) out.add(m, m.j.size() % 2 ? C(-x) : x);
    return out;
}

std::string to_string(const PbwVector<QuadScalar>& v);

// Canonical-form calculus on the lowest-weight module with top level (h, k) and c = 6/5.
// Results are memoized per (mode, monomial); an instance is not thread-safe.
template <class C>
class ModeAlgebra {
public:
    ModeAlgebra(C h, C k) : h_(std::move(h)), k_(std::move(k)) {}

    const C& h() const { return h_; }
    const C& k() const { return k_; }

    const PbwVector<C>& apply_monomial(const Mode& a, const PbwMonomial& m);
    PbwVector<C> apply(const Mode& a, const PbwVector<C>& v);
    // Rightmost mode acts first.
    PbwVector<C> apply_word(std::span<const Mode> word, PbwVector<C> v);
    // [a, b] v via the commutation relations.
    PbwVector<C> bracket(const Mode& a, const Mode& b, const PbwVector<C>& v);

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Key {
        Mode mode;
        PbwMonomial mono;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return MonomialHash{}(k.mono) * 31 + static_cast<std::size_t>(k.mode.index + 64) * 2 +
                   static_cast<std::size_t>(k.mode.gen);
        }
    };

    C h_;
    C k_;
    std::unordered_map<Key, PbwVector<C>, KeyHash> memo_;

    PbwVector<C> compute(const Mode& a, const PbwMonomial& m);
};

extern template class ModeAlgebra<QuadScalar>;
extern template class ModeAlgebra<MultiPoly>;

// One parsed term: coefficient times a word of modes in written order.
struct Term {
    QuadScalar coeff;
    std::vector<Mode> word;
};

std::vector<Term> parse_vector(std::string_view text);

template <class C>
PbwVector<C> canonicalize(const std::vector<Term>& terms, ModeAlgebra<C>& alg) {
    PbwVector<C> out;
    for (const auto& t : terms)
        out.add_scaled(alg.apply_word(t.word, PbwVector<C>::unit(PbwMonomial{})), C(t.coeff));
    return out;
}

}  // namespace w3f
