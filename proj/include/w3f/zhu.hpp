#pragma once

#include "w3f/linalg.hpp"
#include "w3f/modes.hpp"
#include "w3f/singular.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace w3f {

// Scalars replacing left and right *-multiplication by [omega] and [J].
template <class C>
struct ZhuContext {
    C left_h, left_k;    // L^3 top level
    C right_h, right_k;  // L^2 top level
};

// Context with x0 = h2, x1 = k2, x2 = h3, x3 = k3.
ZhuContext<MultiPoly> symbolic_context();
ZhuContext<QuadScalar> numeric_context(const ModuleParams& l2, const ModuleParams& l3);

// Coefficients on the generators [J(-1)^i w], i < d.
template <class C>
using EvaluatedClass = std::vector<C>;

class TruncationExceeded : public std::runtime_error {
public:
    TruncationExceeded(int generator, int truncation)
        : std::runtime_error("generator [J(-1)^" + std::to_string(generator) + " w] needs truncation > " +
                             std::to_string(truncation)),
          generator_(generator) {}
    int generator() const { return generator_; }

private:
    int generator_;
};

// Rewrites classes of A(N) into generator normal form; `eliminator` is a singular vector of degree d
// with nonzero J(-1)^d coefficient, used to rewrite [J(-1)^q w] for q >= d. Not thread-safe.
template <class C>
class Reducer {
public:
    Reducer(const ModuleParams& n, ZhuContext<C> ctx, int truncation,
            std::optional<PbwVector<QuadScalar>> eliminator = std::nullopt);

    EvaluatedClass<C> reduce(const PbwVector<QuadScalar>& x);
    const EvaluatedClass<C>& reduce_monomial(const PbwMonomial& m);

    ModeAlgebra<QuadScalar>& algebra() { return alg_; }
    int truncation() const { return d_; }

private:
    ModeAlgebra<QuadScalar> alg_;
    QuadScalar h1_;
    ZhuContext<C> ctx_;
    int d_;
    std::optional<PbwVector<QuadScalar>> elim_rest_;  // J(-1)^d w - S / lead
    std::unordered_map<PbwMonomial, EvaluatedClass<C>, MonomialHash> memo_;

    EvaluatedClass<C> compute(const PbwMonomial& m);
};

extern template class Reducer<QuadScalar>;
extern template class Reducer<MultiPoly>;

struct RelationSource {
    std::string label;
    PbwVector<QuadScalar> vector;
};

// Everything the upper bound needs about a module N.
struct ZhuModuleSpec {
    std::string name;
    ModuleParams params;
    int truncation = 1;
    std::optional<PbwVector<QuadScalar>> eliminator;
    std::vector<RelationSource> relations;
};

template <class C>
struct RelationMatrix {
    std::vector<std::string> labels;
    std::vector<EvaluatedClass<C>> rows;
    int columns = 0;
};

template <class C>
RelationMatrix<C> relation_matrix(const ZhuModuleSpec& n, const ZhuContext<C>& ctx);

Matrix evaluate(const RelationMatrix<MultiPoly>& m, const ModuleParams& l2, const ModuleParams& l3);

// d - rank of the relation matrix evaluated at (L2, L3); reduces directly with numeric scalars.
int fusion_upper_bound(const ZhuModuleSpec& n, const ModuleParams& l2, const ModuleParams& l3);

// Reduces once with symbolic (h2, k2, h3, k3) and evaluates per pair; agrees with fusion_upper_bound.
class SymbolicBound {
public:
    explicit SymbolicBound(const ZhuModuleSpec& n);
    int upper_bound(const ModuleParams& l2, const ModuleParams& l3) const;
    const RelationMatrix<MultiPoly>& matrix() const { return m_; }
    int truncation() const { return m_.columns; }

private:
    RelationMatrix<MultiPoly> m_;
};

// The scalar relation of a d = 1 module, normalised so the h2^2 coefficient is 50*s3.
class PsiRelation {
public:
    PsiRelation(const ModuleParams& n, const PbwVector<QuadScalar>& eliminator, const PbwVector<QuadScalar>& relation);

    const MultiPoly& raw() const { return raw_; }
    const MultiPoly& normalized() const { return normalized_; }
    // raw = scale * normalized
    const QuadScalar& scale() const { return scale_; }

    QuadScalar operator()(const QuadScalar& h2, const QuadScalar& k2, const QuadScalar& h3,
                          const QuadScalar& k3) const;

private:
    MultiPoly raw_;
    MultiPoly normalized_;
    QuadScalar scale_;
};

}  // namespace w3f
