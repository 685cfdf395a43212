#include "w3f/zhu.hpp"

namespace w3f {

ZhuContext<MultiPoly> symbolic_context() {
    return {MultiPoly::var(2), MultiPoly::var(3), MultiPoly::var(0), MultiPoly::var(1)};
}

ZhuContext<QuadScalar> numeric_context(const ModuleParams& l2, const ModuleParams& l3) {
    return {l3.h, l3.k, l2.h, l2.k};
}

namespace {

template <class C>
void axpy(EvaluatedClass<C>& acc, const EvaluatedClass<C>& x, const C& a) {
    if (is_zero(a)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i])) acc[i] += x[i] * a;
}

bool is_j1_power(const PbwMonomial& m) {
    if (!m.l.empty()) return false;
    for (int p : m.j)
        if (p != 1) return false;
    return true;
}

long sign(long n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

template <class C>
Reducer<C>::Reducer(const ModuleParams& n, ZhuContext<C> ctx, int truncation,
                    std::optional<PbwVector<QuadScalar>> eliminator)
    : alg_(n.h, n.k), h1_(n.h), ctx_(std::move(ctx)), d_(truncation) {
    if (d_ < 1) throw std::invalid_argument("truncation must be >= 1");
    if (eliminator) {
        PbwMonomial top{{}, std::vector<int>(d_, 1)};
        QuadScalar lead = eliminator->coeff(top);
        if (eliminator->homogeneous_degree() != d_ || lead.is_zero())
            throw std::invalid_argument("eliminator must have degree d and a J(-1)^d term");
        PbwVector<QuadScalar> rest = PbwVector<QuadScalar>::unit(top);
        rest.add_scaled(*eliminator, -lead.inv());
        elim_rest_ = std::move(rest);
    }
}

template <class C>
EvaluatedClass<C> Reducer<C>::reduce(const PbwVector<QuadScalar>& x) {
    EvaluatedClass<C> acc(d_);
    for (const auto& [m, c] : x.terms()) axpy(acc, reduce_monomial(m), C(c));
    return acc;
}

template <class C>
const EvaluatedClass<C>& Reducer<C>::reduce_monomial(const PbwMonomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    EvaluatedClass<C> r = compute(m);
    return memo_.emplace(m, std::move(r)).first->second;
}

template <class C>
EvaluatedClass<C> Reducer<C>::compute(const PbwMonomial& m) {
    EvaluatedClass<C> out(d_);
    if (is_j1_power(m)) {
        const int q = static_cast<int>(m.j.size());
        if (q < d_) {
            out[q] = C(1);
            return out;
        }
        if (!elim_rest_) throw TruncationExceeded(q, d_);
        // J(-1)^q w = J(-1)^(q-d) (J(-1)^d w - S / lead) modulo the relation S.
        std::vector<Mode> word(q - d_, Mode{Gen::J, -1});
        return reduce(alg_.apply_word(word, *elim_rest_));
    }
    // Rewrite the leftmost mode X(n), with u the remaining canonical vector.
    if (!m.l.empty()) {
        const long n = -m.l[0];
        PbwMonomial u{std::vector<int>(m.l.begin() + 1, m.l.end()), m.j};
        const QuadScalar wt = h1_ + QuadScalar(static_cast<long>(u.degree()));
        const long sg = sign(n);
        C c = C(QuadScalar(-sg)) * (ctx_.left_h + C(n) * ctx_.right_h) + C(wt * QuadScalar(sg));
        axpy(out, reduce_monomial(u), c);
        return out;
    }
    const long n = -m.j[0];
    PbwMonomial u{{}, std::vector<int>(m.j.begin() + 1, m.j.end())};
    const long sg = sign(n);
    const auto unit = PbwVector<QuadScalar>::unit(u);
    axpy(out, reduce(alg_.apply({Gen::J, -1}, unit)), C(sg * n));
    axpy(out, reduce(alg_.apply({Gen::J, 0}, unit)), C(sg * (n + 1)));
    C c = C(-sg * (n + 1)) * ctx_.left_k - C(QuadScalar(make_rational(sg * n * (n + 1), 2))) * ctx_.right_k;
    axpy(out, reduce_monomial(u), c);
    return out;
}

template class Reducer<QuadScalar>;
template class Reducer<MultiPoly>;

template <class C>
RelationMatrix<C> relation_matrix(const ZhuModuleSpec& n, const ZhuContext<C>& ctx) {
    Reducer<C> red(n.params, ctx, n.truncation, n.eliminator);
    RelationMatrix<C> out;
    out.columns = n.truncation;
    for (const auto& r : n.relations) {
        out.labels.push_back(r.label);
        out.rows.push_back(red.reduce(r.vector));
    }
    return out;
}

template RelationMatrix<QuadScalar> relation_matrix(const ZhuModuleSpec&, const ZhuContext<QuadScalar>&);
template RelationMatrix<MultiPoly> relation_matrix(const ZhuModuleSpec&, const ZhuContext<MultiPoly>&);

Matrix evaluate(const RelationMatrix<MultiPoly>& m, const ModuleParams& l2, const ModuleParams& l3) {
    const std::array<QuadScalar, 4> at{l2.h, l2.k, l3.h, l3.k};
    Matrix out;
    for (const auto& row : m.rows) {
        Row r;
        for (const auto& p : row) r.push_back(p.eval(at));
        out.push_back(std::move(r));
    }
    return out;
}

int fusion_upper_bound(const ZhuModuleSpec& n, const ModuleParams& l2, const ModuleParams& l3) {
    auto m = relation_matrix(n, numeric_context(l2, l3));
    return m.columns - rank(m.rows);
}

SymbolicBound::SymbolicBound(const ZhuModuleSpec& n) : m_(relation_matrix(n, symbolic_context())) {}

int SymbolicBound::upper_bound(const ModuleParams& l2, const ModuleParams& l3) const {
    return m_.columns - rank(evaluate(m_, l2, l3));
}

PsiRelation::PsiRelation(const ModuleParams& n, const PbwVector<QuadScalar>& eliminator,
                         const PbwVector<QuadScalar>& relation) {
    Reducer<MultiPoly> red(n, symbolic_context(), 1, eliminator);
    raw_ = red.reduce(relation)[0];
    QuadScalar c = raw_.coeff({2, 0, 0, 0});
    if (c.is_zero()) throw std::invalid_argument("relation has no h2^2 term");
    scale_ = c / (QuadScalar(50) * QuadScalar::s3());
    normalized_ = raw_ * MultiPoly(scale_.inv());
}

QuadScalar PsiRelation::operator()(const QuadScalar& h2, const QuadScalar& k2, const QuadScalar& h3,
                                   const QuadScalar& k3) const {
    const std::array<QuadScalar, 4> at{h2, k2, h3, k3};
    return normalized_.eval(at);
}

}  // namespace w3f
