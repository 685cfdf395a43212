#include "properties.hpp"

#include "w3f/corpus.hpp"
#include "w3f/zhu.hpp"

#include <doctest.h>

using namespace w3f;

namespace {

const std::string kData = std::string(W3F_SOURCE_DIR) + "/data/appendix/";
const QuadScalar s3 = QuadScalar::s3();

ModuleParams params(const std::string& h, const std::string& k) { return {parse_scalar(h), parse_scalar(k)}; }

PbwVector<QuadScalar> vec(const std::string& file, int record, const ModuleParams& p) {
    ModeAlgebra<QuadScalar> alg(p.h, p.k);
    return canonicalize(read_vectors(kData + file).at(record).terms, alg);
}

PsiRelation psi() {
    const auto p = params("3/5", "-2*s3");
    return PsiRelation(p, vec("w0_1.txt", 0, p), vec("w0_1.txt", 1, p));
}

ZhuModuleSpec w00_spec() {
    const auto p = params("8/5", "0");
    ZhuModuleSpec n{"W0_0", p, 2, vec("w0_0.txt", 0, p), {}};
    ModeAlgebra<QuadScalar> alg(p.h, p.k);
    for (int r : {1, 2}) {
        const auto v = vec("w0_0.txt", r, p);
        n.relations.push_back({"S", v});
        n.relations.push_back({"J(-1) S", alg.apply({Gen::J, -1}, v)});
    }
    return n;
}

}  // namespace

TEST_SUITE("zhu") {
    TEST_CASE("reduce examples") {
        const auto p = params("7/3", "2*s3");
        Reducer<MultiPoly> red(p, symbolic_context(), 2);
        const auto x0 = MultiPoly::var(0), x2 = MultiPoly::var(2);
        auto r = red.reduce(PbwVector<QuadScalar>::unit(PbwMonomial{{1}, {}}));
        CHECK(r[0] == x2 - x0 - MultiPoly(p.h));
        CHECK(r[1].is_zero());
        r = red.reduce(PbwVector<QuadScalar>::unit(PbwMonomial{{}, {1}}));
        CHECK(r[0].is_zero());
        CHECK(r[1] == MultiPoly(1));
        r = red.reduce(PbwVector<QuadScalar>::unit(PbwMonomial{}));
        CHECK(r[0] == MultiPoly(1));
    }

    TEST_CASE("truncation exceeded without an eliminator") {
        Reducer<QuadScalar> red(params("0", "0"), ZhuContext<QuadScalar>{}, 1);
        CHECK_THROWS_AS(red.reduce(PbwVector<QuadScalar>::unit(PbwMonomial{{}, {1}})), TruncationExceeded);
    }

    TEST_CASE("psi coefficients") {
        const auto f = psi();
        const auto& n = f.normalized();
        // x0 = h2, x1 = k2, x2 = h3, x3 = k3
        CHECK(n.coeff({2, 0, 0, 0}) == QuadScalar(50) * s3);
        CHECK(n.coeff({0, 0, 2, 0}) == QuadScalar(50) * s3);
        CHECK(n.coeff({1, 0, 0, 0}) == QuadScalar(-20) * s3);
        CHECK(n.coeff({0, 0, 1, 0}) == QuadScalar(-20) * s3);
        CHECK(n.coeff({0, 0, 0, 0}) == QuadScalar(4) * s3);
        CHECK(n.coeff({1, 0, 1, 0}) == QuadScalar(-100) * s3);
        CHECK(n.coeff({0, 1, 0, 0}) == QuadScalar(-5));
        CHECK(n.coeff({0, 0, 0, 1}) == QuadScalar(5));
        CHECK(n.terms().size() == 8);
        CHECK(f.scale() == QuadScalar(make_rational(14, 5)) * s3);
    }

    TEST_CASE("psi values") {
        const auto f = psi();
        const QuadScalar zero;
        CHECK(f(zero, zero, parse_scalar("3/5"), parse_scalar("-2*s3")).is_zero());
        CHECK(f(parse_scalar("3/5"), parse_scalar("-2*s3"), zero, zero) == QuadScalar(20) * s3);
        CHECK(f(zero, zero, QuadScalar(2), parse_scalar("-12*s3")) == QuadScalar(104) * s3);
        const QuadScalar h = parse_scalar("1/10"), k = parse_scalar("7 + s3");
        CHECK(f(h, k, h, k).is_zero());
    }

    TEST_CASE("upper bound examples for W^{0(1)}") {
        const auto p = params("3/5", "-2*s3");
        ZhuModuleSpec n{"W0_1", p, 1, vec("w0_1.txt", 0, p), {{"w1", vec("w0_1.txt", 1, p)}}};
        CHECK(fusion_upper_bound(n, params("0", "0"), p) == 1);
        CHECK(fusion_upper_bound(n, params("0", "0"), params("2", "-12*s3")) == 0);
        SymbolicBound sb(n);
        CHECK(sb.upper_bound(params("0", "0"), p) == 1);
        CHECK(sb.upper_bound(params("0", "0"), params("2", "-12*s3")) == 0);
    }

    TEST_CASE("rank cases of the W^{0(0)} matrix") {
        const auto n = w00_spec();
        const SymbolicBound sb(n);
        const auto vac = params("0", "0"), w00 = params("8/5", "0"), m1 = params("2", "12*s3");
        // rank 1: W0 x W0 contains the vacuum once.
        CHECK(sb.upper_bound(w00, vac) == 1);
        CHECK(rank(evaluate(sb.matrix(), w00, vac)) == 1);
        // rank 2: W0 x W0 does not contain M^{0(1)}.
        CHECK(sb.upper_bound(w00, m1) == 0);
        // numeric and symbolic paths agree on every pair of these points
        for (const auto& a : {vac, w00, m1, params("1/2", "0")})
            for (const auto& b : {vac, w00, m1, params("1/10", "0")}) CHECK(sb.upper_bound(a, b) == fusion_upper_bound(n, a, b));
    }

    TEST_CASE("J(-1) rewriting is the identity on generators") {
        Reducer<MultiPoly> red(params("8/5", "0"), symbolic_context(), 4);
        for (int q = 0; q < 4; ++q) {
            const auto r = red.reduce(PbwVector<QuadScalar>::unit(PbwMonomial{{}, std::vector<int>(q, 1)}));
            for (int i = 0; i < 4; ++i) CHECK(r[i] == MultiPoly(i == q ? 1 : 0));
        }
    }

    TEST_CASE("reduce is linear") { CHECK(props::reduce_linearity(w00_spec(), 10, 21) == 0); }
}
