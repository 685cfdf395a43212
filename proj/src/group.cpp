#include "w3f/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace w3f {

CocycleViolation::CocycleViolation(int label, int a, int b, int c)
    : std::runtime_error("cocycle identity fails at (L, a, b, c) = (" + std::to_string(label) + ", " +
                         std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")"),
      where{label, a, b, c} {}

namespace {

std::vector<std::string> default_names(int n, std::vector<std::string> names) {
    if (names.empty())
        for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    if (static_cast<int>(names.size()) != n) throw std::invalid_argument("group: wrong number of element names");
    return names;
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(int n, std::vector<std::string> names) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    FiniteGroup g;
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("group: entry out of range");
    }
    g.table_ = std::move(table);
    g.names_ = default_names(n, std::move(names));
    g.identity_ = -1;
    for (int e = 0; e < n && g.identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
        if (ok) g.identity_ = e;
    }
    if (g.identity_ < 0) throw std::invalid_argument("group: no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("group: multiplication is not associative");
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) g.inverse_[a] = b;
        if (g.inverse_[a] < 0) throw std::invalid_argument("group: element without inverse");
    }
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& perms, std::vector<std::string> names) {
    const int n = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(perms[b].size());
            for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
            auto it = index.find(c);
            if (it == index.end()) throw std::invalid_argument("group: permutations are not closed");
            t[a][b] = it->second;
        }
    return from_table(std::move(t), std::move(names));
}

int FiniteGroup::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown group element '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

QuadScalar zeta6() { return {make_rational(1, 2), make_rational(1, 2)}; }

std::vector<Character> abelian_characters(const FiniteGroup& g, const std::vector<int>& subgroup) {
    for (int a : subgroup)
        for (int b : subgroup)
            if (!g.commute(a, b)) throw UnsupportedCocycle("stabilizer is non-abelian");
    std::vector<QuadScalar> roots{QuadScalar(1)};
    for (int i = 1; i < 6; ++i) roots.push_back(roots.back() * zeta6());
    // Generators chosen greedily; a character is fixed by its values on them.
    std::vector<int> gens;
    std::set<int> span{g.identity()};
    for (int a : subgroup) {
        if (span.count(a)) continue;
        gens.push_back(a);
        std::set<int> next = span;
        for (bool grew = true; grew;) {
            grew = false;
            for (int x : std::vector<int>(next.begin(), next.end()))
                for (int y : gens)
                    if (next.insert(g.mul(x, y)).second) grew = true;
        }
        span = std::move(next);
    }
    std::vector<Character> out;
    std::vector<int> choice(gens.size(), 0);
    for (;;) {
        // Extend along words in the generators; reject inconsistent assignments.
        Character chi(g.order());
        std::vector<bool> set(g.order(), false);
        chi[g.identity()] = QuadScalar(1);
        set[g.identity()] = true;
        bool ok = true;
        for (bool grew = true; grew && ok;) {
            grew = false;
            for (int x : subgroup) {
                if (!set[x]) continue;
                for (std::size_t i = 0; i < gens.size() && ok; ++i) {
                    int y = g.mul(x, gens[i]);
                    QuadScalar v = chi[x] * roots[choice[i]];
                    if (!set[y]) {
                        chi[y] = v;
                        set[y] = true;
                        grew = true;
                    } else if (chi[y] != v) {
                        ok = false;
                    }
                }
            }
        }
        if (ok) {
            for (int a : subgroup)
                for (int b : subgroup)
                    if (chi[g.mul(a, b)] != chi[a] * chi[b]) ok = false;
        }
        if (ok) out.push_back(chi);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == 6) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    if (out.size() != subgroup.size()) throw UnsupportedCocycle("stabilizer characters are not all sixth roots of unity");
    // Deterministic order: lexicographic in the exponents on the generators, as enumerated.
    return out;
}

int group_tensor_bound(const FiniteGroup& g, const Character& chi1, const Character& chi2, const Character& chi3) {
    QuadScalar acc;
    for (int a = 0; a < g.order(); ++a) acc += chi1[a] * chi2[a] * chi3[g.inv(a)];
    acc /= QuadScalar(static_cast<long>(g.order()));
    if (!acc.is_rational() || acc.re().get_den() != 1 || sgn(acc.re()) < 0)
        throw std::logic_error("character inner product is not a nonnegative integer");
    return static_cast<int>(acc.re().get_num().get_si());
}

int StableSet::index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("unknown label '" + label + "' in set " + name);
    return static_cast<int>(it - labels.begin());
}

QuadScalar StableSet::alpha(int label, int a, int b) const {
    return cocycle.empty() ? QuadScalar(1) : cocycle[label][a][b];
}

QuadScalar StableSet::beta(int label, int s) const {
    return coboundary.empty() ? QuadScalar(1) : coboundary[label][s];
}

bool StableSet::trivial_cocycle() const {
    for (const auto& l : cocycle)
        for (const auto& r : l)
            for (const auto& x : r)
                if (x != QuadScalar(1)) return false;
    return true;
}

void validate(const FiniteGroup& g, const StableSet& s) {
    const int n = g.order();
    if (static_cast<int>(s.action.size()) != s.size()) throw std::invalid_argument("action table size mismatch");
    for (int l = 0; l < s.size(); ++l) {
        if (static_cast<int>(s.action[l].size()) != n) throw std::invalid_argument("action row size mismatch");
        if (s.action[l][g.identity()] != l) throw std::invalid_argument("identity does not fix " + s.labels[l]);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (s.action[s.action[l][a]][b] != s.action[l][g.mul(a, b)])
                    throw std::invalid_argument("action is not a right action at " + s.labels[l]);
    }
    if (s.cocycle.empty()) return;
    for (int l = 0; l < s.size(); ++l)
        for (int a = 0; a < n; ++a) {
            const int m = s.action[l][g.inv(a)];
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (s.alpha(l, c, g.mul(b, a)) * s.alpha(l, b, a) != s.alpha(m, c, b) * s.alpha(l, g.mul(c, b), a))
                        throw CocycleViolation(l, a, b, c);
        }
}

GroupSetAlgebra::GroupSetAlgebra(FiniteGroup g, StableSet s) : g_(std::move(g)), s_(std::move(s)) {
    validate(g_, s_);
    std::vector<bool> seen(s_.size(), false);
    for (int l = 0; l < s_.size(); ++l) {
        if (seen[l]) continue;
        std::set<int> orb;
        for (int a = 0; a < g_.order(); ++a) orb.insert(s_.action[l][a]);
        for (int x : orb) seen[x] = true;
        orbits_.emplace_back(orb.begin(), orb.end());
    }
}

std::optional<std::pair<int, QuadScalar>> GroupSetAlgebra::product(int x, int y) const {
    const int n = s_.size();
    const int a = x / n, l = x % n, b = y / n, m = y % n;
    if (s_.action[l][b] != m) return std::nullopt;
    return std::make_pair(basis(g_.mul(a, b), m), s_.alpha(m, a, b));
}

std::vector<QuadScalar> GroupSetAlgebra::multiply(const std::vector<QuadScalar>& x,
                                                  const std::vector<QuadScalar>& y) const {
    std::vector<QuadScalar> out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            if (auto p = product(i, j)) out[p->first] += x[i] * y[j] * p->second;
        }
    }
    return out;
}

std::vector<QuadScalar> GroupSetAlgebra::identity() const {
    std::vector<QuadScalar> e(dim());
    for (int l = 0; l < s_.size(); ++l) e[basis(g_.identity(), l)] = QuadScalar(1) / s_.alpha(l, g_.identity(), g_.identity());
    return e;
}

bool GroupSetAlgebra::check_identity() const {
    const auto e = identity();
    for (int i = 0; i < dim(); ++i) {
        std::vector<QuadScalar> x(dim());
        x[i] = QuadScalar(1);
        if (multiply(e, x) != x || multiply(x, e) != x) return false;
    }
    return true;
}

bool GroupSetAlgebra::check_associativity() const {
    for (int x = 0; x < dim(); ++x)
        for (int y = 0; y < dim(); ++y) {
            auto xy = product(x, y);
            for (int z = 0; z < dim(); ++z) {
                auto yz = product(y, z);
                std::optional<std::pair<int, QuadScalar>> left, right;
                if (xy) {
                    if (auto p = product(xy->first, z)) left = std::make_pair(p->first, p->second * xy->second);
                }
                if (yz) {
                    if (auto p = product(x, yz->first)) right = std::make_pair(p->first, p->second * yz->second);
                }
                if (left.has_value() != right.has_value()) return false;
                if (left && *left != *right) return false;
            }
        }
    return true;
}

std::vector<int> GroupSetAlgebra::stabilizer(int label) const {
    std::vector<int> out;
    for (int a = 0; a < g_.order(); ++a)
        if (s_.action[label][a] == label) out.push_back(a);
    return out;
}

GroupSetAlgebra build_algebra(const FiniteGroup& g, const StableSet& s) {
    GroupSetAlgebra a(g, s);
    if (a.dim() <= 64 && !a.check_associativity()) throw std::logic_error("algebra is not associative");
    if (!a.check_identity()) throw std::logic_error("identity element check failed");
    return a;
}

std::vector<SimpleModuleDescriptor> simple_modules(const GroupSetAlgebra& a) {
    const FiniteGroup& g = a.group();
    const StableSet& s = a.set();
    std::vector<SimpleModuleDescriptor> out;
    for (std::size_t o = 0; o < a.orbits().size(); ++o) {
        const int rep = a.orbits()[o].front();
        const auto stab = a.stabilizer(rep);
        for (int x : stab)
            for (int y : stab) {
                QuadScalar expect = s.beta(rep, x) * s.beta(rep, y) / s.beta(rep, g.mul(x, y));
                if (s.alpha(rep, x, y) != expect)
                    throw UnsupportedCocycle("restricted cocycle on the stabilizer of " + s.labels[rep] +
                                             " is not trivialised by the supplied coboundary");
            }
        std::vector<int> cosets{g.identity()};
        std::set<int> covered(stab.begin(), stab.end());
        for (int x = 0; x < g.order(); ++x) {
            if (covered.count(x)) continue;
            cosets.push_back(x);
            for (int t : stab) covered.insert(g.mul(x, t));
        }
        int sum_sq = 0;
        for (auto& chi : abelian_characters(g, stab)) {
            SimpleModuleDescriptor d;
            d.set_orbit = static_cast<int>(o);
            d.rep = rep;
            d.orbit = a.orbits()[o];
            d.stabilizer = stab;
            d.cosets = cosets;
            d.character = std::move(chi);
            sum_sq += d.dim() * d.dim();
            out.push_back(std::move(d));
        }
        if (sum_sq != g.order() * static_cast<int>(a.orbits()[o].size()))
            throw std::logic_error("Wedderburn dimension count fails for orbit of " + s.labels[rep]);
    }
    return out;
}

int component(const GroupSetAlgebra& a, const SimpleModuleDescriptor& w, int coset) {
    return a.set().action[w.rep][a.group().inv(w.cosets[coset])];
}

std::optional<std::pair<int, QuadScalar>> act(const GroupSetAlgebra& a, const SimpleModuleDescriptor& w, int elem,
                                              int label, int coset) {
    const FiniteGroup& g = a.group();
    const StableSet& s = a.set();
    const int gi = w.cosets[coset];
    if (label != component(a, w, coset)) return std::nullopt;
    const int ag = g.mul(elem, gi);
    for (int c = 0; c < w.dim(); ++c) {
        const int gp = w.cosets[c];
        const int st = g.mul(g.inv(gp), ag);
        if (s.action[w.rep][st] != w.rep) continue;
        QuadScalar x = s.alpha(w.rep, elem, gi) / s.alpha(w.rep, gp, st) * s.beta(w.rep, st) * w.character[st];
        return std::make_pair(c, x);
    }
    throw std::logic_error("coset decomposition failed");
}

int IntertwinerData::fusion_dim(const std::string& l1, const std::string& l2, const std::string& l3) const {
    auto it = fusion.find({l1, l2, l3});
    return it == fusion.end() ? 0 : it->second;
}

namespace {

struct TripleOrbits {
    std::map<std::array<int, 3>, std::array<int, 3>> rep;  // T -> T0
    std::map<std::array<int, 3>, int> carrier;             // T -> g_T with T0.g_T^-1 = T
};

}  // namespace

IntertwinerModule intertwiner_module(const GroupSetAlgebra& a1, const SimpleModuleDescriptor& w1,
                                     const GroupSetAlgebra& a2, const SimpleModuleDescriptor& w2,
                                     const GroupSetAlgebra& a3, const IntertwinerData& data) {
    const FiniteGroup& g = a3.group();
    if (g.order() != a1.group().order() || g.order() != a2.group().order())
        throw std::invalid_argument("intertwiner_module: stable sets over different groups");
    for (const auto* a : {&a1, &a2, &a3})
        if (!a->set().trivial_cocycle())
            throw UnsupportedCocycle("intertwiner_module requires trivial cocycles (set " + a->set().name + ")");
    const StableSet &s1 = a1.set(), &s2 = a2.set(), &s3 = a3.set();

    auto act_triple = [&](const std::array<int, 3>& t, int elem) {  // elem . T = T.elem^-1
        int e = g.inv(elem);
        return std::array<int, 3>{s1.action[t[0]][e], s2.action[t[1]][e], s3.action[t[2]][e]};
    };

    std::vector<std::array<int, 3>> triples;
    for (int l1 : w1.orbit)
        for (int l2 : w2.orbit)
            for (int l3 = 0; l3 < s3.size(); ++l3) {
                int dim = data.fusion_dim(s1.labels[l1], s2.labels[l2], s3.labels[l3]);
                if (dim == 0) continue;
                if (dim > 1)
                    throw std::invalid_argument("fusion multiplicity > 1 at (" + s1.labels[l1] + ", " + s2.labels[l2] +
                                                ", " + s3.labels[l3] + ") is unsupported");
                triples.push_back({l1, l2, l3});
            }
    std::set<std::array<int, 3>> triple_set(triples.begin(), triples.end());
    for (const auto& t : triples)
        for (int e = 0; e < g.order(); ++e)
            if (!triple_set.count(act_triple(t, e)))
                throw std::invalid_argument("fusion table is not invariant under the group action");

    TripleOrbits orb;
    for (const auto& t : triples) {
        if (orb.rep.count(t)) continue;
        for (int e = 0; e < g.order(); ++e) {
            auto u = act_triple(t, e);
            if (!orb.rep.count(u)) {
                orb.rep[u] = t;
                orb.carrier[u] = e;
            }
        }
    }

    auto label_triple = [&](const std::array<int, 3>& t) {
        return std::array<std::string, 3>{s1.labels[t[0]], s2.labels[t[1]], s3.labels[t[2]]};
    };
    // s fixes T0; the scalar is looked up at T0 or at any conjugate position in its orbit.
    auto iso = [&](int st, const std::array<int, 3>& t0) -> QuadScalar {
        if (st == g.identity()) return QuadScalar(1);
        for (const auto& [t, r] : orb.rep) {
            if (r != t0) continue;
            int gt = orb.carrier.at(t);
            int conj = g.mul(g.mul(gt, st), g.inv(gt));
            auto it = data.iso_scalars.find({g.name(conj), label_triple(t)});
            if (it != data.iso_scalars.end()) return it->second;
        }
        auto names = label_triple(t0);
        throw MissingIsoScalar("no isoScalar for element " + g.name(st) + " fixing (" + names[0] + ", " + names[1] +
                               ", " + names[2] + ")");
    };

    IntertwinerModule m;
    std::map<std::array<int, 5>, int> index;
    for (const auto& t : triples)
        for (int b1 = 0; b1 < w1.dim(); ++b1) {
            if (component(a1, w1, b1) != t[0]) continue;
            for (int b2 = 0; b2 < w2.dim(); ++b2) {
                if (component(a2, w2, b2) != t[1]) continue;
                index[{t[0], t[1], t[2], b1, b2}] = m.dim();
                m.basis.push_back({t[0], t[1], t[2], b1, b2});
            }
        }

    m.target.assign(g.order(), std::vector<int>(m.dim()));
    m.scalar.assign(g.order(), std::vector<QuadScalar>(m.dim()));
    for (int e = 0; e < g.order(); ++e)
        for (int i = 0; i < m.dim(); ++i) {
            const auto& b = m.basis[i];
            std::array<int, 3> t{b.l1, b.l2, b.l3};
            auto u = act_triple(t, e);
            const auto& t0 = orb.rep.at(t);
            int st = g.mul(g.mul(g.inv(orb.carrier.at(u)), e), orb.carrier.at(t));
            auto p1 = act(a1, w1, e, b.l1, b.b1);
            auto p2 = act(a2, w2, e, b.l2, b.b2);
            m.target[e][i] = index.at({u[0], u[1], u[2], p1->first, p2->first});
            m.scalar[e][i] = iso(st, t0) * p1->second * p2->second;
        }

    // isoScalars on each stabilizer must be a character.
    for (const auto& [t, t0] : orb.rep) {
        if (t != t0) continue;
        std::vector<int> stab;
        for (int e = 0; e < g.order(); ++e)
            if (act_triple(t0, e) == t0) stab.push_back(e);
        for (int x : stab)
            for (int y : stab)
                if (iso(x, t0) * iso(y, t0) != iso(g.mul(x, y), t0))
                    throw std::invalid_argument("isoScalars are not multiplicative on a triple stabilizer");
    }
    return m;
}

int lower_bound(const GroupSetAlgebra& a3, const IntertwinerModule& m, const SimpleModuleDescriptor& target) {
    const FiniteGroup& g = a3.group();
    QuadScalar acc;
    for (int st : target.stabilizer) {
        QuadScalar trace;
        for (int i = 0; i < m.dim(); ++i)
            if (m.basis[i].l3 == target.rep && m.target[st][i] == i) trace += m.scalar[st][i];
        acc += trace / target.character[st];
    }
    acc /= QuadScalar(static_cast<long>(target.stabilizer.size()));
    (void)g;
    if (!acc.is_rational() || acc.re().get_den() != 1 || sgn(acc.re()) < 0)
        throw std::logic_error("multiplicity is not a nonnegative integer");
    return static_cast<int>(acc.re().get_num().get_si());
}

}  // namespace w3f
