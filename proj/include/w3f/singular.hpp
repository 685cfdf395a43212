#pragma once

#include "w3f/execution.hpp"
#include "w3f/modes.hpp"

#include <array>
#include <string>
#include <vector>

namespace w3f {

struct ModuleParams {
    QuadScalar h;
    QuadScalar k;
    friend bool operator==(const ModuleParams&, const ModuleParams&) = default;
};

std::string to_string(const ModuleParams& p);

// Reduced singularity criterion: L(1), L(2), J(1) annihilate the vector.
inline const std::array<Mode, 3> kAnnihilators{Mode{Gen::L, 1}, Mode{Gen::L, 2}, Mode{Gen::J, 1}};

struct SingularReport {
    PbwVector<QuadScalar> vector;
    int degree = 0;
    std::array<PbwVector<QuadScalar>, 3> residuals;  // indexed like kAnnihilators
    bool is_singular = false;
};

class NotHomogeneous : public std::invalid_argument {
public:
    NotHomogeneous() : std::invalid_argument("vector is not homogeneous of positive degree") {}
};

SingularReport is_singular(const PbwVector<QuadScalar>& v, ModeAlgebra<QuadScalar>& alg);
SingularReport is_singular(const std::vector<Term>& terms, const ModuleParams& params);

// Null space of v -> (L(1)v, L(2)v, J(1)v) on the degree-d piece, in reduced echelon form.
std::vector<PbwVector<QuadScalar>> singular_space(int degree, const ModuleParams& params,
                                                  Execution ex = Execution::serial);

// Coordinates of v in graded_basis(degree).
std::vector<QuadScalar> coordinates(const PbwVector<QuadScalar>& v, const std::vector<PbwMonomial>& basis);
PbwVector<QuadScalar> from_coordinates(const std::vector<QuadScalar>& x, const std::vector<PbwMonomial>& basis);

bool in_span(const std::vector<PbwVector<QuadScalar>>& span, const PbwVector<QuadScalar>& v);

enum class SolveStatus { isolated, no_solution, non_isolated };

struct SolveResult {
    SolveStatus status = SolveStatus::no_solution;
    std::vector<ModuleParams> solutions;  // sorted; meaningful when status is isolated
    std::vector<std::string> warnings;
};

std::string to_string(SolveStatus s);

// All (h, k) in Q(sqrt(-3))^2 for which every vector is singular (joint system).
SolveResult solve_params(const std::vector<std::vector<Term>>& vectors);
SolveResult solve_params(const std::vector<Term>& vector);

// Solves a polynomial system in x0 = h, x1 = k over Q(sqrt(-3)).
SolveResult solve_bivariate(std::vector<MultiPoly> equations);

// Roots in Q(sqrt(-3)) of p, each verified exactly; `complete` is false when p does not split.
struct FieldRoots {
    std::vector<QuadScalar> roots;
    bool complete = true;
};
FieldRoots field_roots(const UniPoly& p);

// Res_{x1}(p, q) as a polynomial in x0; p and q may only involve x0 and x1.
UniPoly resultant_x1(const MultiPoly& p, const MultiPoly& q);

}  // namespace w3f
