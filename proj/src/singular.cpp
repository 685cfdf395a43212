#include "w3f/singular.hpp"

#include "w3f/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace w3f {

std::string to_string(const ModuleParams& p) { return "(" + to_string(p.h) + ", " + to_string(p.k) + ")"; }

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::isolated: return "isolated";
        case SolveStatus::no_solution: return "no solution";
        case SolveStatus::non_isolated: return "non-isolated solutions";
    }
    return "?";
}

SingularReport is_singular(const PbwVector<QuadScalar>& v, ModeAlgebra<QuadScalar>& alg) {
    SingularReport r;
    r.degree = v.homogeneous_degree();
    if (r.degree < 1) throw NotHomogeneous();
    r.vector = v;
    r.is_singular = true;
    for (std::size_t i = 0; i < kAnnihilators.size(); ++i) {
        r.residuals[i] = alg.apply(kAnnihilators[i], v);
        if (!r.residuals[i].is_zero()) r.is_singular = false;
    }
    return r;
}

SingularReport is_singular(const std::vector<Term>& terms, const ModuleParams& params) {
    ModeAlgebra<QuadScalar> alg(params.h, params.k);
    return is_singular(canonicalize(terms, alg), alg);
}

std::vector<QuadScalar> coordinates(const PbwVector<QuadScalar>& v, const std::vector<PbwMonomial>& basis) {
    std::vector<QuadScalar> x(basis.size());
    std::size_t matched = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        x[i] = v.coeff(basis[i]);
        if (!x[i].is_zero()) ++matched;
    }
    if (matched != v.size()) throw std::invalid_argument("vector has terms outside the basis");
    return x;
}

PbwVector<QuadScalar> from_coordinates(const std::vector<QuadScalar>& x, const std::vector<PbwMonomial>& basis) {
    PbwVector<QuadScalar> v;
    for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], x[i]);
    return v;
}

namespace {

// Column i holds the stacked residual coordinates of basis monomial i.
Row residual_column(ModeAlgebra<QuadScalar>& alg, const PbwMonomial& m,
                    const std::array<std::vector<PbwMonomial>, 3>& targets) {
    Row col;
    for (std::size_t a = 0; a < kAnnihilators.size(); ++a) {
        auto r = alg.apply(kAnnihilators[a], PbwVector<QuadScalar>::unit(m));
        auto x = coordinates(r, targets[a]);
        col.insert(col.end(), x.begin(), x.end());
    }
    return col;
}

}  // namespace

std::vector<PbwVector<QuadScalar>> singular_space(int degree, const ModuleParams& params, Execution ex) {
    if (degree < 1) throw std::invalid_argument("singular_space: degree must be >= 1");
    const auto basis = graded_basis(degree);
    const std::array<std::vector<PbwMonomial>, 3> targets{
        graded_basis(degree - 1), degree >= 2 ? graded_basis(degree - 2) : std::vector<PbwMonomial>{},
        graded_basis(degree - 1)};
    const int n = static_cast<int>(basis.size());
    std::vector<Row> cols(n);
    if (ex == Execution::parallel) {
#pragma omp parallel
        {
            ModeAlgebra<QuadScalar> alg(params.h, params.k);
#pragma omp for schedule(dynamic)
            for (int i = 0; i < n; ++i) cols[i] = residual_column(alg, basis[i], targets);
        }
    } else {
        ModeAlgebra<QuadScalar> alg(params.h, params.k);
        for (int i = 0; i < n; ++i) cols[i] = residual_column(alg, basis[i], targets);
    }
    const std::size_t nrows = cols.empty() ? 0 : cols[0].size();
    Matrix m(nrows, Row(n));
    for (int i = 0; i < n; ++i)
        for (std::size_t r = 0; r < nrows; ++r) m[r][i] = cols[i][r];
    std::vector<PbwVector<QuadScalar>> out;
    for (const auto& x : nullspace(m, n, ex)) out.push_back(from_coordinates(x, basis));
    return out;
}

bool in_span(const std::vector<PbwVector<QuadScalar>>& span, const PbwVector<QuadScalar>& v) {
    int d = v.homogeneous_degree();
    if (d < 0) return v.is_zero();
    const auto basis = graded_basis(d);
    Matrix m;
    for (const auto& s : span) m.push_back(coordinates(s, basis));
    int r0 = rank(m);
    m.push_back(coordinates(v, basis));
    return rank(m) == r0;
}

UniPoly resultant_x1(const MultiPoly& p, const MultiPoly& q) {
    const auto pc = p.coeffs_in(1);
    const auto qc = q.coeffs_in(1);
    const int dp = static_cast<int>(pc.size()) - 1;
    const int dq = static_cast<int>(qc.size()) - 1;
    if (dp < 1 || dq < 1) throw std::invalid_argument("resultant_x1: both polynomials must involve x1");
    const int bound = dp * std::max(0, q.degree_in(0)) + dq * std::max(0, p.degree_in(0));
    const int size = dp + dq;
    std::vector<QuadScalar> xs, ys;
    for (int t = 0; t <= bound; ++t) {
        QuadScalar x(static_cast<long>(t));
        std::vector<QuadScalar> pv, qv;
        for (const auto& c : pc) pv.push_back(c.to_uni(0).eval(x));
        for (const auto& c : qc) qv.push_back(c.to_uni(0).eval(x));
        // Sylvester matrix, coefficients from the highest power down.
        Matrix s(size, Row(size));
        for (int r = 0; r < dq; ++r)
            for (int i = 0; i <= dp; ++i) s[r][r + i] = pv[dp - i];
        for (int r = 0; r < dp; ++r)
            for (int i = 0; i <= dq; ++i) s[dq + r][r + i] = qv[dq - i];
        xs.push_back(x);
        ys.push_back(determinant(s));
    }
    return UniPoly::interpolate(xs, ys);
}

namespace {

using Cplx = std::complex<long double>;

Cplx to_complex(const QuadScalar& x) {
    return {static_cast<long double>(x.re().get_d()),
            static_cast<long double>(x.s3_part().get_d()) * std::sqrt(3.0L)};
}

// Aberth iteration on a monic polynomial.
std::vector<Cplx> numeric_roots(const UniPoly& monic) {
    const int n = monic.degree();
    std::vector<Cplx> c;
    for (const auto& x : monic.coeffs()) c.push_back(to_complex(x));
    long double radius = 1;
    for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(c[i]));
    std::vector<Cplx> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(radius * 0.5L, 2 * std::numbers::pi_v<long double> * i / n + 0.4L);
    auto eval = [&](Cplx x, Cplx& deriv) {
        Cplx p = c[n], dp = 0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + c[i];
        }
        deriv = dp;
        return p;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            Cplx d;
            Cplx p = eval(z[i], d);
            if (p == Cplx(0)) continue;
            Cplx ratio = p / d;
            Cplx sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0L / (z[i] - z[j]);
            Cplx step = ratio / (1.0L - ratio * sum);
            z[i] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (change < 1e-17L) break;
    }
    return z;
}

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(long double x, long max_den) {
    std::vector<Rational> out;
    mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    long double r = x;
    for (int it = 0; it < 40; ++it) {
        if (!std::isfinite(r) || std::fabs(r) > 1e15L) break;
        long double a = std::floor(r);
        mpz_class ai(static_cast<double>(a));
        mpz_class h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        if (k2 > max_den) break;
        Rational q(h2, k2);
        q.canonicalize();
        out.push_back(q);
        h1 = h0;
        h0 = h2;
        k1 = k0;
        k0 = k2;
        long double frac = r - a;
        if (std::fabs(frac) < 1e-18L) break;
        r = 1 / frac;
    }
    return out;
}

}  // namespace

FieldRoots field_roots(const UniPoly& p) {
    FieldRoots out;
    if (p.degree() < 1) return out;
    UniPoly sq = UniPoly::divmod(p, UniPoly::gcd(p, p.derivative())).first.monic();
    if (sq.degree() == 1) {
        out.roots.push_back(-sq.coeff(0));
        return out;
    }
    const long double s3 = std::sqrt(3.0L);
    for (const Cplx& z : numeric_roots(sq)) {
        auto as = convergents(z.real(), 10'000'000);
        auto bs = convergents(z.imag() / s3, 10'000'000);
        if (std::fabs(z.real()) < 1e-12L) as.insert(as.begin(), Rational(0));
        if (std::fabs(z.imag()) < 1e-12L) bs.insert(bs.begin(), Rational(0));
        bool found = false;
        for (auto a = as.rbegin(); a != as.rend() && !found; ++a)
            for (auto b = bs.rbegin(); b != bs.rend() && !found; ++b) {
                QuadScalar cand(*a, *b);
                if (sq.eval(cand).is_zero()) {
                    found = true;
                    if (std::find(out.roots.begin(), out.roots.end(), cand) == out.roots.end())
                        out.roots.push_back(cand);
                }
            }
    }
    out.complete = static_cast<int>(out.roots.size()) == sq.degree();
    return out;
}

namespace {

bool params_less(const ModuleParams& x, const ModuleParams& y) {
    auto key = [](const ModuleParams& p) {
        return std::array<Rational, 4>{p.h.re(), p.h.s3_part(), p.k.re(), p.k.s3_part()};
    };
    auto a = key(x), b = key(y);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t complexity(const MultiPoly& p) {
    std::size_t bits = 0;
    for (const auto& [e, c] : p.terms())
        bits += mpz_sizeinbase(c.re().get_num_mpz_t(), 2) + mpz_sizeinbase(c.s3_part().get_num_mpz_t(), 2);
    return bits;
}

}  // namespace

SolveResult solve_bivariate(std::vector<MultiPoly> equations) {
    SolveResult res;
    std::erase_if(equations, [](const MultiPoly& p) { return p.is_zero(); });
    for (const auto& e : equations)
        if (e.degree_in(2) > 0 || e.degree_in(3) > 0) throw std::invalid_argument("solve_bivariate: extra variables");
    if (equations.empty()) {
        res.status = SolveStatus::non_isolated;
        res.warnings.push_back("all conditions vanish identically");
        return res;
    }
    for (const auto& e : equations)
        if (e.total_degree() == 0) return res;

    std::sort(equations.begin(), equations.end(), [](const MultiPoly& a, const MultiPoly& b) {
        auto ka = std::make_tuple(a.degree_in(1), a.total_degree(), complexity(a));
        auto kb = std::make_tuple(b.degree_in(1), b.total_degree(), complexity(b));
        return ka < kb;
    });

    // Any equation set eliminates to a polynomial in h vanishing at every solution; use the cheapest.
    UniPoly elim;
    const MultiPoly* pivot = nullptr;
    for (const auto& e : equations) {
        if (e.degree_in(1) <= 0) {
            elim = UniPoly::gcd(elim, e.to_uni(0));
            continue;
        }
        if (!elim.is_zero()) break;
        if (!pivot) {
            pivot = &e;
            continue;
        }
        elim = resultant_x1(*pivot, e);
    }
    if (elim.is_zero()) {
        res.status = SolveStatus::non_isolated;
        res.warnings.push_back("eliminant in h vanishes identically");
        return res;
    }
    FieldRoots hr = field_roots(elim);
    if (!hr.complete) res.warnings.push_back("solutions may exist outside Q(sqrt(-3)): eliminant in h does not split");

    for (const auto& h0 : hr.roots) {
        UniPoly g;
        bool dead = false;
        for (const auto& e : equations) {
            UniPoly u = e.substitute(0, h0).to_uni(1);
            if (u.is_zero()) continue;
            if (u.degree() == 0) {
                dead = true;
                break;
            }
            g = UniPoly::gcd(g, u);
        }
        if (dead) continue;
        if (g.is_zero()) {
            res.status = SolveStatus::non_isolated;
            res.warnings.push_back("k is unconstrained at h = " + to_string(h0));
            return res;
        }
        if (g.degree() == 0) continue;
        FieldRoots kr = field_roots(g);
        if (!kr.complete)
            res.warnings.push_back("solutions may exist outside Q(sqrt(-3)): k-polynomial at h = " + to_string(h0) +
                                   " does not split");
        for (const auto& k0 : kr.roots) res.solutions.push_back({h0, k0});
    }
    std::sort(res.solutions.begin(), res.solutions.end(), params_less);
    res.status = res.solutions.empty() ? SolveStatus::no_solution : SolveStatus::isolated;
    return res;
}

SolveResult solve_params(const std::vector<std::vector<Term>>& vectors) {
    ModeAlgebra<MultiPoly> alg(MultiPoly::var(0), MultiPoly::var(1));
    std::vector<MultiPoly> eqs;
    for (const auto& terms : vectors) {
        auto v = canonicalize(terms, alg);
        if (v.homogeneous_degree() < 1) throw NotHomogeneous();
        for (const auto& a : kAnnihilators) {
            auto r = alg.apply(a, v);
            for (const auto& [m, c] : r.terms()) eqs.push_back(c);
        }
    }
    return solve_bivariate(std::move(eqs));
}

SolveResult solve_params(const std::vector<Term>& vector) { return solve_params(std::vector<std::vector<Term>>{vector}); }

}  // namespace w3f
