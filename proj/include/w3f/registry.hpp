#pragma once

#include "w3f/group.hpp"
#include "w3f/singular.hpp"
#include "w3f/zhu.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace w3f {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NamedVector {
    std::string name;
    std::string source;  // file:line, for messages
    std::vector<Term> terms;
};

struct OrbifoldPlacement {
    std::string set;    // stable set name in the group config
    std::string label;  // V-module label of the orbit representative
    std::vector<QuadScalar> character;  // lambda per group element; entries off the stabilizer ignored
};

struct RegistryModule {
    std::string name;
    std::string display;
    std::string contragredient;
    std::string family;
    std::optional<int> index;  // superscript i of an indexed family, mod 3
    std::vector<NamedVector> vectors;
    ModuleParams params;
    bool params_solved = false;  // recovered by solve_params rather than given
    ZhuModuleSpec zhu;
    std::optional<OrbifoldPlacement> orbifold;
};

struct FamilyInfo {
    std::string name;
    std::string display;  // "{}" marks the index position
    bool indexed = false;
};

struct GroupConfig {
    FiniteGroup group = FiniteGroup::cyclic(1);
    std::vector<GroupSetAlgebra> algebras;
    IntertwinerData data;

    const GroupSetAlgebra& algebra(const std::string& set) const;
};

struct ModuleRegistry {
    std::vector<FamilyInfo> families;
    std::vector<RegistryModule> modules;
    std::optional<GroupConfig> group;
    std::string vacuum;  // name of the module playing the role of the VOA itself

    int index_of(const std::string& name) const;
    const FamilyInfo* family(const std::string& name) const;
};

// Twisted-sector candidates only carry parameters.
struct TwistedCandidate {
    std::string name;
    ModuleParams params;
};

std::vector<Term> flip_terms(std::vector<Term> terms);

GroupConfig load_group_config(const std::filesystem::path& path);
// Relative paths inside the file are resolved against its directory. Missing params are solved
// from the module's vectors; every vector is re-verified singular at the final params.
ModuleRegistry load_registry(const std::filesystem::path& path);
std::vector<TwistedCandidate> load_twisted(const std::filesystem::path& path);

// Involution and (h, k)' = (h, -k); returns one message per violation.
std::vector<std::string> check_contragredients(const ModuleRegistry& r);

}  // namespace w3f
