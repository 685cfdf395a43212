#include "properties.hpp"

#include "w3f/group.hpp"
#include "w3f/linalg.hpp"
#include "w3f/registry.hpp"

#include <doctest.h>

#include <numeric>

using namespace w3f;

namespace {

const std::string kConfig = std::string(W3F_SOURCE_DIR) + "/configs/group_z3.json";

FiniteGroup s3_group() {
    std::vector<int> p{0, 1, 2};
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroup::from_permutations(perms);
}

StableSet single(const std::string& name, int order) {
    return {name, {name}, {std::vector<int>(order, 0)}, {}, {}};
}

// Z3 = {e, t, t2} acting on a, b, c by a.t = c, c.t = b, b.t = a.
StableSet regular() {
    return {"Ma", {"Ma", "Mb", "Mc"}, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}, {}, {}};
}

// Dimension of the centre, an oracle for the number of simple modules of a semisimple algebra.
int centre_dimension(const GroupSetAlgebra& a) {
    const int n = a.dim();
    Matrix m;
    for (int y = 0; y < n; ++y) {
        std::vector<QuadScalar> ey(n);
        ey[y] = QuadScalar(1);
        // rows: coordinates of x*ey - ey*x, linear in x
        std::vector<Row> block(n, Row(n));
        for (int x = 0; x < n; ++x) {
            std::vector<QuadScalar> ex(n);
            ex[x] = QuadScalar(1);
            const auto l = a.multiply(ex, ey), r = a.multiply(ey, ex);
            for (int i = 0; i < n; ++i) block[i][x] = l[i] - r[i];
        }
        for (auto& row : block) m.push_back(std::move(row));
    }
    return static_cast<int>(nullspace(m, n).size());
}

}  // namespace

TEST_SUITE("group") {
    TEST_CASE("group axioms are verified") {
        CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), std::invalid_argument);
        const auto g = s3_group();
        CHECK(g.order() == 6);
        for (int a = 0; a < 6; ++a) CHECK(g.mul(a, g.inv(a)) == g.identity());
        CHECK(FiniteGroup::cyclic(3, {"e", "t", "t2"}).index_of("t2") == 2);
    }

    TEST_CASE("S3 tensor multiplicities") {
        const auto g = s3_group();
        // Oracle characters from the permutation action: fixed points minus one, and parity.
        Character triv(6, QuadScalar(1)), sign(6), stdc(6);
        std::vector<int> p{0, 1, 2};
        int i = 0;
        do {
            int fixed = 0, inversions = 0;
            for (int x = 0; x < 3; ++x) {
                fixed += p[x] == x;
                for (int y = x + 1; y < 3; ++y) inversions += p[x] > p[y];
            }
            stdc[i] = QuadScalar(fixed - 1);
            sign[i] = QuadScalar(inversions % 2 ? -1 : 1);
            ++i;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(group_tensor_bound(g, stdc, stdc, triv) == 1);
        CHECK(group_tensor_bound(g, stdc, stdc, sign) == 1);
        CHECK(group_tensor_bound(g, stdc, stdc, stdc) == 1);
        for (const auto* a : {&triv, &sign, &stdc})
            for (const auto* c : {&triv, &sign, &stdc})
                CHECK(group_tensor_bound(g, *a, triv, *c) == (a == c ? 1 : 0));
    }

    TEST_CASE("Z3 tensor bound is the product rule") {
        const auto g = FiniteGroup::cyclic(3);
        const auto chars = abelian_characters(g, {0, 1, 2});
        REQUIRE(chars.size() == 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    Character prod(3);
                    for (int x = 0; x < 3; ++x) prod[x] = chars[a][x] * chars[b][x];
                    CHECK(group_tensor_bound(g, chars[a], chars[b], chars[c]) == (prod == chars[c] ? 1 : 0));
                }
    }

    TEST_CASE("build_algebra examples") {
        const auto g = FiniteGroup::cyclic(3);
        const auto w0 = build_algebra(g, single("W0", 3));
        CHECK(w0.dim() == 3);
        CHECK(simple_modules(w0).size() == 3);
        CHECK(centre_dimension(w0) == 3);

        const auto ma = build_algebra(g, regular());
        CHECK(ma.dim() == 9);
        const auto s = simple_modules(ma);
        REQUIRE(s.size() == 1);
        CHECK(s[0].dim() == 3);
        CHECK(centre_dimension(ma) == 1);

        const auto trivial = FiniteGroup::cyclic(1);
        StableSet four{"S", {"p", "q", "r", "s"}, {{0}, {1}, {2}, {3}}, {}, {}};
        const auto fa = build_algebra(trivial, four);
        CHECK(simple_modules(fa).size() == 4);
        CHECK(centre_dimension(fa) == 4);
    }

    TEST_CASE("disjoint orbits split into ideals") {
        const auto g = FiniteGroup::cyclic(3);
        StableSet s{"mixed", {"W0", "Ma", "Mb", "Mc"}, {{0, 0, 0}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}}, {}, {}};
        const auto a = build_algebra(g, s);
        const auto mods = simple_modules(a);
        REQUIRE(mods.size() == 4);
        int sum = 0, ones = 0;
        for (const auto& m : mods) {
            sum += m.dim() * m.dim();
            ones += m.dim() == 1;
        }
        CHECK(sum == a.dim());
        CHECK(ones == 3);
        CHECK(centre_dimension(a) == 4);
        // Each orbit ideal has identity sum of 1 x e(M) over the orbit.
        for (const auto& orbit : a.orbits()) {
            std::vector<QuadScalar> e(a.dim());
            for (int m : orbit) e[a.basis(g.identity(), m)] = QuadScalar(1);
            for (int x = 0; x < a.dim(); ++x) {
                std::vector<QuadScalar> ex(a.dim());
                ex[x] = QuadScalar(1);
                const bool inside = std::find(orbit.begin(), orbit.end(), x % s.size()) != orbit.end();
                CHECK((a.multiply(e, ex) == (inside ? ex : std::vector<QuadScalar>(a.dim()))));
            }
        }
    }

    TEST_CASE("cocycle identity violations are reported") {
        const auto g = FiniteGroup::cyclic(2);
        StableSet s = single("X", 2);
        s.cocycle = {{{QuadScalar(1), QuadScalar(1)}, {QuadScalar(1), QuadScalar(2)}}};
        s.cocycle[0][0][1] = QuadScalar(3);
        try {
            validate(g, s);
            FAIL("expected a cocycle violation");
        } catch (const CocycleViolation& e) {
            CHECK(e.where[0] == 0);
        }
    }

    TEST_CASE("coboundary cocycles are accepted with their trivialisation") {
        const auto g = FiniteGroup::cyclic(3);
        const std::vector<QuadScalar> beta{QuadScalar(1), QuadScalar(2), QuadScalar(5)};
        StableSet s = single("X", 3);
        s.cocycle.assign(1, std::vector<std::vector<QuadScalar>>(3, std::vector<QuadScalar>(3)));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) s.cocycle[0][a][b] = beta[a] * beta[b] / beta[g.mul(a, b)];
        s.coboundary = {beta};
        const auto a = build_algebra(g, s);
        const auto mods = simple_modules(a);
        CHECK(mods.size() == 3);
        // The twisted action is still a representation: rho(s) rho(t) = alpha(s, t) rho(st).
        for (const auto& m : mods)
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y) {
                    auto px = act(a, m, x, 0, 0), py = act(a, m, y, 0, 0), pxy = act(a, m, g.mul(x, y), 0, 0);
                    CHECK(px->second * py->second == s.cocycle[0][x][y] * pxy->second);
                }
        s.coboundary = {{QuadScalar(1), QuadScalar(1), QuadScalar(1)}};
        CHECK_THROWS_AS(simple_modules(build_algebra(g, s)), UnsupportedCocycle);
    }

    TEST_CASE("phi composition around the free orbit is the identity") {
        const auto g = FiniteGroup::cyclic(3);
        const auto a = build_algebra(g, regular());
        const auto w = simple_modules(a).front();
        for (int b = 0; b < w.dim(); ++b) {
            int cur = b;
            QuadScalar scalar(1);
            for (int step = 0; step < 3; ++step) {
                auto r = act(a, w, 1, component(a, w, cur), cur);
                REQUIRE(r.has_value());
                scalar *= r->second;
                cur = r->first;
            }
            CHECK(cur == b);
            CHECK(scalar == QuadScalar(1));
        }
    }

    TEST_CASE("orbifold lower bounds on the shipped configuration") {
        const auto c = load_group_config(kConfig);
        const auto &w0 = c.algebra("W0"), &ma = c.algebra("Ma"), &m0 = c.algebra("M0"), &wa = c.algebra("Wa");
        const auto sw = simple_modules(w0), sm = simple_modules(ma), s0 = simple_modules(m0), swa = simple_modules(wa);
        // tau acts on f x x_i x x_j by xi^{i+j}.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const auto mod = intertwiner_module(w0, sw[i], w0, sw[j], w0, c.data);
                CHECK(mod.dim() == 1);
                for (int k = 0; k < 3; ++k) CHECK(lower_bound(w0, mod, sw[k]) == ((i + j) % 3 == k ? 1 : 0));
            }
        const auto mm = intertwiner_module(ma, sm[0], ma, sm[0], ma, c.data);
        CHECK(mm.dim() == 6);
        CHECK(lower_bound(ma, mm, sm[0]) == 2);
        CHECK(lower_bound(wa, intertwiner_module(ma, sm[0], wa, swa[0], wa, c.data), swa[0]) == 2);
        // target not appearing
        CHECK(lower_bound(w0, intertwiner_module(m0, s0[0], w0, sw[1], w0, c.data), sw[2]) == 0);
    }

    TEST_CASE("complete reducibility of intertwiner modules") {
        const auto c = load_group_config(kConfig);
        for (const auto& a1 : c.algebras)
            for (const auto& a2 : c.algebras)
                for (const auto& a3 : c.algebras)
                    for (const auto& w1 : simple_modules(a1))
                        for (const auto& w2 : simple_modules(a2)) {
                            IntertwinerModule mod;
                            try {
                                mod = intertwiner_module(a1, w1, a2, w2, a3, c.data);
                            } catch (const MissingIsoScalar&) {
                                continue;
                            }
                            int total = 0;
                            for (const auto& w3 : simple_modules(a3)) total += lower_bound(a3, mod, w3) * w3.dim();
                            CHECK(total == mod.dim());
                        }
    }

    TEST_CASE("missing isoScalars and empty fusion data") {
        const auto c = load_group_config(kConfig);
        const auto &w0 = c.algebra("W0"), &m0 = c.algebra("M0");
        const auto sw = simple_modules(w0), s0 = simple_modules(m0);
        CHECK_THROWS_AS(intertwiner_module(w0, sw[0], w0, sw[0], m0, c.data), MissingIsoScalar);
        const auto empty = intertwiner_module(w0, sw[0], w0, sw[0], m0, IntertwinerData{});
        CHECK(empty.dim() == 0);
        CHECK(lower_bound(m0, empty, s0[0]) == 0);
    }

    TEST_CASE("shipped algebras are associative with identity") {
        CHECK(props::associativity(load_group_config(kConfig)) == 0);
    }
}
