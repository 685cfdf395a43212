#include "w3f/modes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace w3f {

std::string to_string(const Mode& m) {
    return std::string(m.gen == Gen::L ? "L(" : "J(") + std::to_string(m.index) + ")";
}

int PbwMonomial::degree() const {
    return std::accumulate(l.begin(), l.end(), 0) + std::accumulate(j.begin(), j.end(), 0);
}

namespace {

void append_block(std::string& s, const char* g, const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t e = i;
        while (e < parts.size() && parts[e] == parts[i]) ++e;
        if (!s.empty()) s += "*";
        s += g;
        s += "(-" + std::to_string(parts[i]) + ")";
        if (e - i > 1) s += "^" + std::to_string(e - i);
        i = e;
    }
}

}  // namespace

std::string to_string(const PbwMonomial& m) {
    std::string s;
    append_block(s, "L", m.l);
    append_block(s, "J", m.j);
    return s.empty() ? "w" : s;
}

bool GradedOrder::operator()(const PbwMonomial& a, const PbwMonomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.l != b.l) return b.l < a.l;
    return b.j < a.j;
}

std::size_t MonomialHash::operator()(const PbwMonomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : m.l) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    h = (h ^ 0xffu) * 1099511628211ull;
    for (int x : m.j) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
}

namespace {

// Weakly decreasing partitions of n with parts <= max_part.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return out;
}

}  // namespace

std::vector<PbwMonomial> graded_basis(int degree) {
    std::vector<PbwMonomial> out;
    for (int i = degree; i >= 0; --i)
        for (const auto& lp : partitions(i))
            for (const auto& jp : partitions(degree - i)) out.push_back({lp, jp});
    std::sort(out.begin(), out.end(), GradedOrder{});
    return out;
}

std::string to_string(const PbwVector<QuadScalar>& v) {
    if (v.is_zero()) return "0";
    std::string s;
    auto emit = [&](const Rational& c, bool s3, const PbwMonomial& m) {
        if (sgn(c) == 0) return;
        Rational mag = abs(c);
        s += s.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        std::string factors = m.empty() ? "" : to_string(m);
        std::string coeff = mag == 1 && !factors.empty() ? "" : mag.get_str();
        if (s3) coeff = coeff.empty() ? "s3" : coeff + "*s3";
        if (coeff.empty()) s += factors;
        else if (factors.empty()) s += coeff;
        else s += coeff + "*" + factors;
    };
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        emit(it->second.re(), false, it->first);
        emit(it->second.s3_part(), true, it->first);
    }
    return s;
}

template <class C>
const PbwVector<C>& ModeAlgebra<C>::apply_monomial(const Mode& a, const PbwMonomial& m) {
    Key key{a, m};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    PbwVector<C> r = compute(a, m);
    return memo_.emplace(std::move(key), std::move(r)).first->second;
}

template <class C>
PbwVector<C> ModeAlgebra<C>::apply(const Mode& a, const PbwVector<C>& v) {
    PbwVector<C> out;
    for (const auto& [m, c] : v.terms()) out.add_scaled(apply_monomial(a, m), c);
    return out;
}

template <class C>
PbwVector<C> ModeAlgebra<C>::apply_word(std::span<const Mode> word, PbwVector<C> v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
    return v;
}

template <class C>
PbwVector<C> ModeAlgebra<C>::compute(const Mode& a, const PbwMonomial& m) {
    const int n = a.index;
    const int d = m.degree();
    PbwVector<C> out;
    if (n > d) return out;

    Mode x{};
    PbwMonomial rest;
    auto split_first = [&] {
        if (!m.l.empty()) {
            x = {Gen::L, -m.l[0]};
            rest = {std::vector<int>(m.l.begin() + 1, m.l.end()), m.j};
        } else {
            x = {Gen::J, -m.j[0]};
            rest = {{}, std::vector<int>(m.j.begin() + 1, m.j.end())};
        }
    };

    if (n >= 0) {
        if (a.gen == Gen::L && n == 0) {
            out.add(m, h_ + C(d));
            return out;
        }
        if (m.empty()) {
            if (n == 0) out.add(m, k_);
            return out;
        }
        // a x Y = [a, x] Y + x (a Y)
        split_first();
        out = bracket(a, x, PbwVector<C>::unit(rest));
        out += apply(x, apply_monomial(a, rest));
        return out;
    }

    // Creation mode: prepend when already in canonical position, otherwise a x Y = x (a Y) + [a, x] Y.
    if (a.gen == Gen::L) {
        if (m.l.empty() || -n >= m.l[0]) {
            PbwMonomial r = m;
            r.l.insert(r.l.begin(), -n);
            out.add(r, C(1));
            return out;
        }
    } else if (m.l.empty() && (m.j.empty() || -n >= m.j[0])) {
        PbwMonomial r = m;
        r.j.insert(r.j.begin(), -n);
        out.add(r, C(1));
        return out;
    }
    split_first();
    out = apply(x, apply_monomial(a, rest));
    out += bracket(a, x, PbwVector<C>::unit(rest));
    return out;
}

template <class C>
PbwVector<C> ModeAlgebra<C>::bracket(const Mode& a, const Mode& b, const PbwVector<C>& v) {
    const long m = a.index, n = b.index, s = m + n;
    const Rational central_charge = make_rational(6, 5);
    PbwVector<C> out;
    if (a.gen == Gen::L && b.gen == Gen::L) {
        out.add_scaled(apply({Gen::L, static_cast<int>(s)}, v), C(m - n));
        if (s == 0) out.add_scaled(v, C(QuadScalar(make_rational(m * m * m - m, 12) * central_charge)));
        return out;
    }
    if (a.gen == Gen::L && b.gen == Gen::J) {
        out.add_scaled(apply({Gen::J, static_cast<int>(s)}, v), C(2 * m - n));
        return out;
    }
    if (a.gen == Gen::J && b.gen == Gen::L) {
        out.add_scaled(apply({Gen::J, static_cast<int>(s)}, v), C(m - 2 * n));
        return out;
    }
    // [J(m), J(n)]
    out.add_scaled(apply({Gen::L, static_cast<int>(s)}, v),
                   C((m - n) * (22 * (s + 2) * (s + 3) + 35 * (m + 2) * (n + 2))));
    // Lambda_s = sum_{k<=-2} L(k)L(s-k) + sum_{k>=-1} L(s-k)L(k), truncated by the operand degree.
    const int D = v.max_degree();
    PbwVector<C> lambda;
    for (long k = s - D; k <= -2; ++k)
        lambda += apply({Gen::L, static_cast<int>(k)}, apply({Gen::L, static_cast<int>(s - k)}, v));
    for (long k = -1; k <= D; ++k)
        lambda += apply({Gen::L, static_cast<int>(s - k)}, apply({Gen::L, static_cast<int>(k)}, v));
    out.add_scaled(lambda, C(-120 * (m - n)));
    if (s == 0)
        out.add_scaled(v, C(QuadScalar(make_rational(-7, 10) * Rational(m * (m * m - 1) * (m * m - 4)))));
    return out;
}

template class ModeAlgebra<QuadScalar>;
template class ModeAlgebra<MultiPoly>;

namespace {

// expr := term (('+'|'-') term)* ; term := coeff ('*' factor)* | factor ('*' factor)*
// coeff := rational | rational '*' 's3' | 's3' ; factor := ('L'|'J') '(' '-' integer ')' ['^' integer]
class VectorParser {
public:
    explicit VectorParser(std::string_view s) : s_(s) {}

    std::vector<Term> parse() {
        std::vector<Term> out;
        skip();
        bool neg = false;
        if (peek('-')) {
            ++i_;
            neg = true;
        } else if (peek('+')) {
            ++i_;
        }
        out.push_back(term(neg));
        for (;;) {
            skip();
            if (i_ == s_.size()) return out;
            if (peek('+')) neg = false;
            else if (peek('-')) neg = true;
            else throw ParseError("expected '+' or '-'", i_);
            ++i_;
            out.push_back(term(neg));
        }
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    void expect(char c) {
        if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", i_);
        ++i_;
    }
    bool at_s3() {
        skip();
        return s_.substr(i_, 2) == "s3";
    }
    bool at_digit() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }

    mpz_class integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected integer", start);
        return mpz_class(std::string(s_.substr(start, i_ - start)));
    }

    Term term(bool neg) {
        Term t{QuadScalar(1), {}};
        bool need_factor = true;
        if (at_digit()) {
            Rational r(integer());
            if (peek('/')) {
                ++i_;
                std::size_t at = i_;
                mpz_class den = integer();
                if (den == 0) throw ParseError("zero denominator", at);
                r /= Rational(den);
            }
            t.coeff = QuadScalar(r);
            need_factor = false;
            if (peek('*')) {
                std::size_t save = i_;
                ++i_;
                if (at_s3()) {
                    i_ += 2;
                    t.coeff *= QuadScalar::s3();
                } else {
                    i_ = save;
                }
            }
        } else if (at_s3()) {
            i_ += 2;
            t.coeff = QuadScalar::s3();
            need_factor = false;
        }
        if (need_factor) factor(t.word);
        while (peek('*')) {
            ++i_;
            factor(t.word);
        }
        if (neg) t.coeff = -t.coeff;
        return t;
    }

    void factor(std::vector<Mode>& word) {
        skip();
        if (i_ >= s_.size() || (s_[i_] != 'L' && s_[i_] != 'J'))
            throw ParseError("expected L(...) or J(...)", i_);
        Gen g = s_[i_] == 'L' ? Gen::L : Gen::J;
        ++i_;
        expect('(');
        expect('-');
        std::size_t at = i_;
        mpz_class n = integer();
        if (n < 1 || n > 64) throw ParseError("mode index out of range", at);
        expect(')');
        long power = 1;
        if (peek('^')) {
            ++i_;
            at = i_;
            mpz_class p = integer();
            if (p < 1 || p > 64) throw ParseError("power out of range", at);
            power = p.get_si();
        }
        for (long r = 0; r < power; ++r) word.push_back({g, -static_cast<int>(n.get_si())});
    }
};

}  // namespace

std::vector<Term> parse_vector(std::string_view text) { return VectorParser(text).parse(); }

}  // namespace w3f
