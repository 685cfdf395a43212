#pragma once

#include "w3f/execution.hpp"
#include "w3f/registry.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace w3f {

enum class Verdict { determined, gap, violated };
std::string to_string(Verdict v);

struct FusionBoundReport {
    std::string l1, l2, l3;
    int lower = 0;         // after closure under swap and contragredient flip
    int lower_direct = 0;  // orbifold computation for this triple alone
    int upper = -1;        // -1 when the upper bound could not be computed
    Verdict verdict = Verdict::gap;
    bool twisted = false;  // l3 is a twisted-sector candidate
    std::string error;
};

struct FusionTable {
    std::vector<std::string> modules;  // registry order
    std::vector<FusionBoundReport> entries;
    bool twisted_checked = false;
    std::vector<std::string> warnings;

    const FusionBoundReport* find(const std::string& l1, const std::string& l2, const std::string& l3) const;
};

// Upper bounds from the Zhu relations of L1, lower bounds from the orbifold group data.
// Per-triple failures land in FusionBoundReport::error; the sweep always completes.
FusionTable build_table(const ModuleRegistry& r, const std::vector<TwistedCandidate>* twisted = nullptr,
                        Execution ex = Execution::serial);

// N(L3; L1, L2) = N(L3; L2, L1) and N(L3; L1, L2) = N(L2'; L1, L3') on determined entries.
std::vector<std::string> check_symmetries(const FusionTable& t, const ModuleRegistry& r);

enum class EmitFormat { text, records };
std::string emit(const FusionTable& t, const ModuleRegistry& r, EmitFormat f);

}  // namespace w3f
