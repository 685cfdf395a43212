#include "properties.hpp"

#include "w3f/modes.hpp"

#include <doctest.h>

using namespace w3f;

namespace {

// Number of pairs of partitions of total size n, from prod 1/(1-q^m)^2.
std::vector<long> partition_pairs(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int copy = 0; copy < 2; ++copy)
        for (int m = 1; m <= n; ++m)
            for (int i = m; i <= n; ++i) p[i] += p[i - m];
    return p;
}

PbwVector<QuadScalar> mono(std::vector<int> l, std::vector<int> j) {
    return PbwVector<QuadScalar>::unit(PbwMonomial{std::move(l), std::move(j)});
}

}  // namespace

TEST_SUITE("modes") {
    const QuadScalar h(make_rational(7, 3)), k(QuadScalar(1, -2));

    TEST_CASE("graded basis sizes match the partition-pair count") {
        const auto oracle = partition_pairs(8);
        for (int d = 0; d <= 8; ++d) CHECK(static_cast<long>(graded_basis(d).size()) == oracle[d]);
        CHECK(graded_basis(6).size() == 65);
    }

    TEST_CASE("graded basis order and canonical form") {
        const auto b = graded_basis(2);
        REQUIRE(b.size() == 5);
        CHECK(b[0] == PbwMonomial{{2}, {}});
        CHECK(b[1] == PbwMonomial{{1, 1}, {}});
        CHECK(b[2] == PbwMonomial{{1}, {1}});
        CHECK(b[3] == PbwMonomial{{}, {2}});
        CHECK(b[4] == PbwMonomial{{}, {1, 1}});
        for (int d = 0; d <= 5; ++d)
            for (const auto& m : graded_basis(d)) {
                CHECK(m.degree() == d);
                CHECK(std::is_sorted(m.l.rbegin(), m.l.rend()));
                CHECK(std::is_sorted(m.j.rbegin(), m.j.rend()));
            }
    }

    TEST_CASE("apply_mode examples") {
        const QuadScalar hh = QuadScalar(0, 1) + QuadScalar(2);  // generic probe value
        ModeAlgebra<QuadScalar> alg(hh, k);
        const auto w = mono({}, {});
        CHECK(alg.apply({Gen::L, 1}, mono({1}, {})) == w.scaled(QuadScalar(2) * hh));
        CHECK(alg.apply({Gen::L, 2}, mono({2}, {})) == w.scaled(QuadScalar(4) * hh + QuadScalar(make_rational(3, 5))));
        CHECK(alg.apply({Gen::J, 1}, mono({}, {1})) == w.scaled(QuadScalar(-240) * hh * hh - QuadScalar(6) * hh));
        CHECK(alg.apply({Gen::J, 1}, mono({1}, {})) == w.scaled(QuadScalar(3) * k));
    }

    TEST_CASE("apply_word follows the Virasoro identity") {
        ModeAlgebra<QuadScalar> alg(h, k);
        const std::vector<Mode> word{{Gen::L, 1}, {Gen::L, -1}, {Gen::L, -1}};
        const auto w = mono({}, {});
        // L(1)L(-1)^2 w = (4L(-1)L(0) + 2L(-1)) w
        CHECK(alg.apply_word(word, w) == mono({1}, {}).scaled(QuadScalar(4) * h + QuadScalar(2)));
        CHECK(alg.apply_word({}, mono({2, 1}, {3})) == mono({2, 1}, {3}));
        CHECK(alg.apply({Gen::J, 0}, w) == w.scaled(k));
    }

    TEST_CASE("grading and weights") {
        ModeAlgebra<QuadScalar> alg(h, k);
        for (int d = 0; d <= 4; ++d)
            for (const auto& m : graded_basis(d)) {
                const auto v = PbwVector<QuadScalar>::unit(m);
                CHECK(alg.apply({Gen::L, 0}, v) == v.scaled(h + QuadScalar(d)));
                for (int n = -2; n <= d; ++n)
                    for (Gen g : {Gen::L, Gen::J}) {
                        const auto r = alg.apply({g, n}, v);
                        CHECK((r.is_zero() || r.homogeneous_degree() == d - n));
                    }
                CHECK(alg.apply({Gen::L, d + 1}, v).is_zero());
                CHECK(alg.apply({Gen::J, d + 1}, v).is_zero());
            }
    }

    TEST_CASE("bracket consistency with symbolic parameters") { CHECK(props::bracket_consistency(2, 3) == 0); }

    TEST_CASE("parse_vector") {
        auto t = parse_vector("9*s3*L(-1) + J(-1)");
        REQUIRE(t.size() == 2);
        CHECK(t[0].coeff == QuadScalar(0, 9));
        CHECK(t[0].word == std::vector<Mode>{{Gen::L, -1}});
        CHECK(t[1].coeff == QuadScalar(1));
        CHECK(t[1].word == std::vector<Mode>{{Gen::J, -1}});

        t = parse_vector("5*J(-1)^2");
        REQUIRE(t.size() == 1);
        CHECK(t[0].coeff == QuadScalar(5));
        CHECK(t[0].word == std::vector<Mode>{{Gen::J, -1}, {Gen::J, -1}});

        t = parse_vector("-30*s3*L(-1)*J(-1)");
        REQUIRE(t.size() == 1);
        CHECK(t[0].coeff == QuadScalar(0, -30));
        CHECK(t[0].word == std::vector<Mode>{{Gen::L, -1}, {Gen::J, -1}});

        CHECK_THROWS_AS(parse_vector("3*L(1)"), ParseError);
        CHECK_THROWS_AS(parse_vector("3*K(-1)"), ParseError);
    }

    TEST_CASE("canonicalize reorders written words") {
        ModeAlgebra<QuadScalar> alg(h, k);
        // J(-1)L(-1) w = L(-1)J(-1) w - [L(-1), J(-1)] w = L(-1)J(-1) w + J(-2) w
        const auto v = canonicalize(parse_vector("J(-1)*L(-1)"), alg);
        auto expect = mono({1}, {1});
        expect += mono({}, {2});
        CHECK(v == expect);
    }

    TEST_CASE("flip_j negates odd J-degree terms") {
        auto v = mono({1}, {1});
        v += mono({}, {1, 1});
        auto f = flip_j(v);
        CHECK(f.coeff(PbwMonomial{{1}, {1}}) == QuadScalar(-1));
        CHECK(f.coeff(PbwMonomial{{}, {1, 1}}) == QuadScalar(1));
        CHECK(flip_j(f) == v);
    }
}
