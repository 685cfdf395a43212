#include "w3f/polynomial.hpp"

#include <algorithm>

namespace w3f {

UniPoly::UniPoly(std::vector<QuadScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QuadScalar UniPoly::eval(const QuadScalar& x) const {
    QuadScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<QuadScalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * QuadScalar(static_cast<long>(i)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    QuadScalar l = lead().inv();
    std::vector<QuadScalar> d(c_);
    for (auto& x : d) x *= l;
    return UniPoly(std::move(d));
}

UniPoly UniPoly::conj() const {
    std::vector<QuadScalar> d;
    for (const auto& x : c_) d.push_back(x.conj());
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<QuadScalar> d(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < p.c_.size(); ++i) d[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) d[i] += q.c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<QuadScalar> d(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < p.c_.size(); ++i) d[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) d[i] -= q.c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<QuadScalar> d(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) d[i + j] += p.c_[i] * q.c_[j];
    return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& p, const UniPoly& div) {
    if (div.is_zero()) throw DivisionByZero();
    std::vector<QuadScalar> rem(p.c_);
    int dd = div.degree();
    std::vector<QuadScalar> quot(std::max(0, p.degree() - dd + 1));
    QuadScalar il = div.lead().inv();
    for (int i = p.degree(); i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        QuadScalar f = rem[i] * il;
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * div.c_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly p, UniPoly q) {
    while (!q.is_zero()) {
        UniPoly r = divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

UniPoly UniPoly::interpolate(std::span<const QuadScalar> xs, std::span<const QuadScalar> ys) {
    // Newton divided differences.
    std::size_t n = xs.size();
    std::vector<QuadScalar> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    UniPoly acc;
    for (std::size_t i = n; i-- > 0;) acc = acc * UniPoly({-xs[i], QuadScalar(1)}) + UniPoly(dd[i]);
    return acc;
}

MultiPoly::MultiPoly(const QuadScalar& c) {
    if (!c.is_zero()) t_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::var(int i) {
    MultiPoly p;
    Exponent e{};
    e[i] = 1;
    p.t_.emplace(e, QuadScalar(1));
    return p;
}

QuadScalar MultiPoly::coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? QuadScalar() : it->second;
}

int MultiPoly::degree_in(int v) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[v]));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

QuadScalar MultiPoly::eval(std::span<const QuadScalar> values) const {
    QuadScalar acc;
    for (const auto& [e, c] : t_) {
        QuadScalar term = c;
        for (int v = 0; v < kVars; ++v)
            for (int p = 0; p < e[v]; ++p) term *= values[v];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int v, const QuadScalar& value) const {
    MultiPoly out;
    for (const auto& [e, c] : t_) {
        QuadScalar term = c;
        for (int p = 0; p < e[v]; ++p) term *= value;
        Exponent f = e;
        f[v] = 0;
        MultiPoly m;
        if (!term.is_zero()) m.t_.emplace(f, term);
        out += m;
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int v) const {
    std::vector<MultiPoly> out(std::max(0, degree_in(v) + 1));
    for (const auto& [e, c] : t_) {
        Exponent f = e;
        f[v] = 0;
        out[e[v]].t_.emplace(f, c);
    }
    return out;
}

UniPoly MultiPoly::to_uni(int v) const {
    std::vector<QuadScalar> c(std::max(0, degree_in(v) + 1));
    for (const auto& [e, x] : t_) {
        for (int w = 0; w < kVars; ++w)
            if (w != v && e[w] != 0) throw std::logic_error("to_uni: polynomial has other variables");
        c[e[v]] = x;
    }
    return UniPoly(std::move(c));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) {
        auto [it, fresh] = t_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) {
        auto [it, fresh] = t_.emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly out;
    for (const auto& [e, c] : p.t_)
        for (const auto& [f, d] : q.t_) {
            MultiPoly::Exponent g;
            for (int v = 0; v < MultiPoly::kVars; ++v) g[v] = static_cast<std::uint8_t>(e[v] + f[v]);
            QuadScalar x = c * d;
            auto [it, fresh] = out.t_.emplace(g, x);
            if (!fresh) {
                it->second += x;
                if (it->second.is_zero()) out.t_.erase(it);
            }
        }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : t_) out.t_.emplace(e, -c);
    return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int v = 0; v < kVars; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string cs = w3f::to_string(c);
        if (mono.empty()) s += cs;
        else if (c == QuadScalar(1)) s += mono;
        else s += "(" + cs + ")*" + mono;
    }
    return s;
}

}  // namespace w3f
