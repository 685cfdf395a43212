#pragma once

#include "w3f/scalars.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace w3f {

class UnsupportedCocycle : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class MissingIsoScalar : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CocycleViolation : public std::runtime_error {
public:
    CocycleViolation(int label, int a, int b, int c);
    std::array<int, 4> where;  // (L, a, b, c)
};

// Elements are 0..n-1; associativity, identity and inverses verified on construction.
class FiniteGroup {
public:
    static FiniteGroup cyclic(int n, std::vector<std::string> names = {});
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> names = {});
    // Elements given as permutations of {0..m-1}; composition (p*q)(x) = p(q(x)). Must be closed.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms,
                                         std::vector<std::string> names = {});

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int identity() const { return identity_; }
    int inv(int a) const { return inverse_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    int index_of(const std::string& name) const;
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    int identity_ = 0;
};

// Class function on a subgroup, stored over all of G; entries off the subgroup are unused.
using Character = std::vector<QuadScalar>;

// Primitive sixth root of unity 1/2 + (1/2)s3; xi = zeta^2.
QuadScalar zeta6();

// All homomorphisms from an abelian subgroup into the sixth roots of unity.
// Throws UnsupportedCocycle when the subgroup is non-abelian or they do not exhaust its dual.
std::vector<Character> abelian_characters(const FiniteGroup& g, const std::vector<int>& subgroup);

// <chi3, chi1 chi2> over G.
int group_tensor_bound(const FiniteGroup& g, const Character& chi1, const Character& chi2, const Character& chi3);

// Labels L with a right action L -> L.a and a 2-cocycle alpha_L(a, b).
struct StableSet {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> action;  // action[L][a] = L.a
    // alpha[L][a][b]; empty means trivial.
    std::vector<std::vector<std::vector<QuadScalar>>> cocycle;
    // beta[L][s] with alpha_L(s, t) = beta(s) beta(t) / beta(st) on the stabilizer of L; empty means 1.
    std::vector<std::vector<QuadScalar>> coboundary;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;
    QuadScalar alpha(int label, int a, int b) const;
    QuadScalar beta(int label, int s) const;
    bool trivial_cocycle() const;
};

// Right action and cocycle identity; throws CocycleViolation with the offending (L, a, b, c).
void validate(const FiniteGroup& g, const StableSet& s);

struct SimpleModuleDescriptor {
    int set_orbit = 0;           // index into orbits()
    int rep = 0;                 // orbit representative L
    std::vector<int> orbit;      // labels in the orbit
    std::vector<int> stabilizer; // G_L
    std::vector<int> cosets;     // left coset representatives g of G_L, g = identity first
    Character character;         // one-dimensional lambda on G_L
    int dim() const { return static_cast<int>(cosets.size()); }
};

// Basis (a, L) with index a * |S| + L; (a x e(L))(b x e(M)) = alpha_M(a, b) ab x delta_{L.b, M} e(M).
class GroupSetAlgebra {
public:
    GroupSetAlgebra(FiniteGroup g, StableSet s);

    const FiniteGroup& group() const { return g_; }
    const StableSet& set() const { return s_; }
    int dim() const { return g_.order() * s_.size(); }
    int basis(int a, int label) const { return a * s_.size() + label; }

    // Product of two basis elements as (basis index, scalar), or nullopt for zero.
    std::optional<std::pair<int, QuadScalar>> product(int x, int y) const;
    std::vector<QuadScalar> multiply(const std::vector<QuadScalar>& x, const std::vector<QuadScalar>& y) const;
    std::vector<QuadScalar> identity() const;
    // Checked exhaustively on the basis; returns false on the first failure.
    bool check_associativity() const;
    bool check_identity() const;

    const std::vector<std::vector<int>>& orbits() const { return orbits_; }
    std::vector<int> stabilizer(int label) const;

private:
    FiniteGroup g_;
    StableSet s_;
    std::vector<std::vector<int>> orbits_;
};

GroupSetAlgebra build_algebra(const FiniteGroup& g, const StableSet& s);

std::vector<SimpleModuleDescriptor> simple_modules(const GroupSetAlgebra& a);

// Action of a x e(M) on basis vector b_g of the simple module: (target coset index, scalar) or nullopt.
std::optional<std::pair<int, QuadScalar>> act(const GroupSetAlgebra& a, const SimpleModuleDescriptor& w, int elem,
                                              int label, int coset);
// Component label of basis vector b_g, i.e. L.g^-1.
int component(const GroupSetAlgebra& a, const SimpleModuleDescriptor& w, int coset);

// V-level fusion rules and the scalars by which fixing elements act on 1-dimensional intertwiner spaces.
struct IntertwinerData {
    std::map<std::array<std::string, 3>, int> fusion;  // (L1, L2, L3) -> dim
    std::map<std::pair<std::string, std::array<std::string, 3>>, QuadScalar> iso_scalars;  // (a, T) -> scalar

    int fusion_dim(const std::string& l1, const std::string& l2, const std::string& l3) const;
};

struct IntertwinerBasis {
    int l1, l2, l3;  // triple
    int b1, b2;      // coset indices in W1, W2
};

// A3-module I_{(j1,l1),(j2,l2)}; the action of each group element is monomial.
struct IntertwinerModule {
    std::vector<IntertwinerBasis> basis;
    // For a x e(M): basis i maps to target[a][i] with scalar[a][i] when basis[i].l3 == M.
    std::vector<std::vector<int>> target;
    std::vector<std::vector<QuadScalar>> scalar;
    int dim() const { return static_cast<int>(basis.size()); }
};

IntertwinerModule intertwiner_module(const GroupSetAlgebra& a1, const SimpleModuleDescriptor& w1,
                                     const GroupSetAlgebra& a2, const SimpleModuleDescriptor& w2,
                                     const GroupSetAlgebra& a3, const IntertwinerData& data);

// dim Hom_{A3}(W3, I) by the trace form over the stabilizer of W3's representative.
int lower_bound(const GroupSetAlgebra& a3, const IntertwinerModule& m, const SimpleModuleDescriptor& target);

}  // namespace w3f
