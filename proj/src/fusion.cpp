#include "w3f/fusion.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

namespace w3f {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::determined: return "determined";
        case Verdict::gap: return "gap";
        case Verdict::violated: return "violated";
    }
    return "?";
}

const FusionBoundReport* FusionTable::find(const std::string& l1, const std::string& l2, const std::string& l3) const {
    for (const auto& e : entries)
        if (e.l1 == l1 && e.l2 == l2 && e.l3 == l3) return &e;
    return nullptr;
}

namespace {

using Triple = std::array<int, 3>;

struct Placement {
    const GroupSetAlgebra* algebra = nullptr;
    SimpleModuleDescriptor simple;
};

std::optional<Placement> place(const ModuleRegistry& r, const RegistryModule& m,
                               const std::map<std::string, std::vector<SimpleModuleDescriptor>>& simples) {
    if (!m.orbifold || !r.group) return std::nullopt;
    const auto& p = *m.orbifold;
    const auto& a = r.group->algebra(p.set);
    const int label = a.set().index_of(p.label);
    for (const auto& s : simples.at(p.set)) {
        if (std::find(s.orbit.begin(), s.orbit.end(), label) == s.orbit.end()) continue;
        bool same = true;
        for (int x : s.stabilizer) same = same && s.character[x] == p.character[x];
        if (same) return Placement{&a, s};
    }
    throw ConfigError(m.name + ": character does not match a simple module of set " + p.set);
}

Verdict judge(int lower, int upper) {
    if (upper < 0) return Verdict::gap;
    if (lower > upper) return Verdict::violated;
    return lower == upper ? Verdict::determined : Verdict::gap;
}

}  // namespace

FusionTable build_table(const ModuleRegistry& r, const std::vector<TwistedCandidate>* twisted, Execution ex) {
    FusionTable t;
    const int n = static_cast<int>(r.modules.size());
    for (const auto& m : r.modules) t.modules.push_back(m.name);
    if (n == 0) {
        t.warnings.push_back("registry is empty; nothing to compute");
        return t;
    }
    const bool par = ex == Execution::parallel;

    // Upper bounds: one symbolic reduction per L1.
    std::vector<std::unique_ptr<SymbolicBound>> bounds(n);
    std::vector<std::string> bound_error(n);
#pragma omp parallel for schedule(dynamic) if (par)
    for (int i = 0; i < n; ++i) {
        try {
            bounds[i] = std::make_unique<SymbolicBound>(r.modules[i].zhu);
        } catch (const std::exception& e) {
            bound_error[i] = e.what();
        }
    }

    // Lower bounds computed directly where orbifold data exists.
    std::map<std::string, std::vector<SimpleModuleDescriptor>> simples;
    if (r.group)
        for (const auto& a : r.group->algebras) simples[a.set().name] = simple_modules(a);
    std::vector<std::optional<Placement>> placed(n);
    for (int i = 0; i < n; ++i) placed[i] = place(r, r.modules[i], simples);

    const int cells = n * n * n;
    std::vector<int> direct(cells, 0);
    std::vector<std::string> lower_error(cells);
#pragma omp parallel for collapse(2) schedule(dynamic) if (par)
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            if (!placed[i1] || !placed[i2]) continue;
            std::map<std::string, IntertwinerModule> modules;
            for (int i3 = 0; i3 < n; ++i3) {
                const int c = (i1 * n + i2) * n + i3;
                if (!placed[i3]) continue;
                const auto& a3 = *placed[i3]->algebra;
                try {
                    auto it = modules.find(a3.set().name);
                    if (it == modules.end())
                        it = modules
                                 .emplace(a3.set().name,
                                          intertwiner_module(*placed[i1]->algebra, placed[i1]->simple,
                                                             *placed[i2]->algebra, placed[i2]->simple, a3,
                                                             r.group->data))
                                 .first;
                    direct[c] = lower_bound(a3, it->second, placed[i3]->simple);
                } catch (const MissingIsoScalar& e) {
                    lower_error[c] = e.what();
                } catch (const std::exception& e) {
                    lower_error[c] = e.what();
                }
            }
        }

    // Closure of the lower bounds under the swap and contragredient-flip symmetries.
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) dual[i] = r.index_of(r.modules[i].contragredient);
    auto cell = [n](const Triple& x) { return (x[0] * n + x[1]) * n + x[2]; };
    std::vector<int> closed(cells, -1);
    for (int c = 0; c < cells; ++c) {
        if (closed[c] >= 0) continue;
        std::vector<Triple> orbit{{c / (n * n), (c / n) % n, c % n}};
        std::set<int> seen{c};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const auto x = orbit[k];
            for (const Triple& y : {Triple{x[1], x[0], x[2]}, Triple{x[0], dual[x[2]], dual[x[1]]}})
                if (seen.insert(cell(y)).second) orbit.push_back(y);
        }
        int best = 0;
        for (int y : seen) best = std::max(best, direct[y]);
        for (int y : seen) closed[y] = best;
    }

    t.entries.resize(cells);
#pragma omp parallel for schedule(dynamic) if (par)
    for (int c = 0; c < cells; ++c) {
        const int i1 = c / (n * n), i2 = (c / n) % n, i3 = c % n;
        auto& e = t.entries[c];
        e.l1 = r.modules[i1].name;
        e.l2 = r.modules[i2].name;
        e.l3 = r.modules[i3].name;
        e.lower_direct = direct[c];
        e.lower = closed[c];
        if (bounds[i1]) {
            try {
                e.upper = bounds[i1]->upper_bound(r.modules[i2].params, r.modules[i3].params);
            } catch (const std::exception& ex) {
                e.error = ex.what();
            }
        } else {
            e.error = bound_error[i1];
        }
        if (e.error.empty() && !lower_error[c].empty() && e.lower_direct == 0 && e.lower == 0)
            e.error = "lower bound: " + lower_error[c];
        e.verdict = judge(e.lower, e.upper);
    }

    if (twisted && !twisted->empty()) {
        t.twisted_checked = true;
        const int m = static_cast<int>(twisted->size());
        std::vector<FusionBoundReport> extra(n * n * m);
#pragma omp parallel for schedule(dynamic) if (par)
        for (int c = 0; c < n * n * m; ++c) {
            const int i1 = c / (n * m), i2 = (c / m) % n, k = c % m;
            auto& e = extra[c];
            e.l1 = r.modules[i1].name;
            e.l2 = r.modules[i2].name;
            e.l3 = (*twisted)[k].name;
            e.twisted = true;
            if (bounds[i1]) {
                try {
                    e.upper = bounds[i1]->upper_bound(r.modules[i2].params, (*twisted)[k].params);
                } catch (const std::exception& ex) {
                    e.error = ex.what();
                }
            } else {
                e.error = bound_error[i1];
            }
            e.verdict = judge(0, e.upper);
        }
        t.entries.insert(t.entries.end(), extra.begin(), extra.end());
    } else {
        t.warnings.push_back("twisted-sector candidates: not checked (no parameters supplied)");
    }
    for (int i = 0; i < n; ++i)
        if (!bound_error[i].empty()) t.warnings.push_back(r.modules[i].name + ": " + bound_error[i]);
    return t;
}

std::vector<std::string> check_symmetries(const FusionTable& t, const ModuleRegistry& r) {
    std::vector<std::string> out;
    auto text = [](const FusionBoundReport& e) { return "N(" + e.l3 + "; " + e.l1 + ", " + e.l2 + ")"; };
    for (const auto& e : t.entries) {
        if (e.twisted || e.verdict != Verdict::determined) continue;
        const auto* swap = t.find(e.l2, e.l1, e.l3);
        const auto* flip = t.find(e.l1, r.modules[r.index_of(e.l3)].contragredient,
                                  r.modules[r.index_of(e.l2)].contragredient);
        for (const auto* o : {swap, flip}) {
            if (!o || o->verdict != Verdict::determined) continue;
            if (o->upper != e.upper)
                out.push_back(text(e) + " = " + std::to_string(e.upper) + " but " + text(*o) + " = " +
                              std::to_string(o->upper));
        }
    }
    return out;
}

namespace {

std::string render(const std::string& display, const std::string& index) {
    std::string s = display;
    auto p = s.find("{}");
    if (p != std::string::npos) s.replace(p, 2, index);
    return s;
}

std::string multiplicity(const FusionBoundReport& e) {
    if (e.verdict == Verdict::determined) return std::to_string(e.upper);
    return "[" + std::to_string(e.lower) + ".." + (e.upper < 0 ? std::string("?") : std::to_string(e.upper)) + "]";
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? " + " : "") + terms[i];
    return s;
}

std::string coeff_prefix(int c) { return c == 1 ? "" : std::to_string(c) + " "; }

class TextEmitter {
public:
    TextEmitter(const FusionTable& t, const ModuleRegistry& r) : t_(t), r_(r) {
        for (const auto& f : r.families) {
            std::vector<int> members;
            for (int i = 0; i < static_cast<int>(r.modules.size()); ++i)
                if (r.modules[i].family == f.name) members.push_back(i);
            if (f.indexed)
                std::sort(members.begin(), members.end(),
                          [&](int a, int b) { return r.modules[a].index.value_or(0) < r.modules[b].index.value_or(0); });
            fam_.push_back({&f, members});
        }
    }

    std::string run() {
        std::ostringstream out;
        if (!r_.vacuum.empty()) out << vacuum_row();
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < static_cast<int>(fam_.size()); ++a)
            for (int b = a; b < static_cast<int>(fam_.size()); ++b) pairs.emplace_back(a, b);
        auto plain = [&](const std::pair<int, int>& p) {
            return !fam_[p.first].info->indexed + !fam_[p.second].info->indexed;
        };
        std::stable_sort(pairs.begin(), pairs.end(),
                         [&](const auto& x, const auto& y) { return plain(x) < plain(y); });
        for (const auto& [a, b] : pairs) out << family_product(a, b);
        return out.str();
    }

private:
    struct Family {
        const FamilyInfo* info;
        std::vector<int> members;
    };

    const FusionTable& t_;
    const ModuleRegistry& r_;
    std::vector<Family> fam_;

    const FusionBoundReport& at(int i1, int i2, int i3) const {
        return *t_.find(r_.modules[i1].name, r_.modules[i2].name, r_.modules[i3].name);
    }

    std::string vacuum_row() const {
        const int v = r_.index_of(r_.vacuum);
        const int n = static_cast<int>(r_.modules.size());
        bool delta = true;
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3) {
                const auto& e = at(v, i2, i3);
                delta = delta && e.verdict == Verdict::determined && e.upper == (i2 == i3 ? 1 : 0);
            }
        if (delta) return "W x L = L\n";
        std::string s;
        for (int i2 = 0; i2 < n; ++i2) s += concrete_line(v, i2);
        return s;
    }

    std::string concrete_line(int i1, int i2) const {
        std::vector<std::string> terms;
        for (int i3 = 0; i3 < static_cast<int>(r_.modules.size()); ++i3) {
            const auto& e = at(i1, i2, i3);
            if (e.verdict == Verdict::determined && e.upper == 0) continue;
            const std::string m = multiplicity(e);
            terms.push_back((m == "1" ? "" : m + " ") + r_.modules[i3].display);
        }
        return r_.modules[i1].display + " x " + r_.modules[i2].display + " = " + join_terms(terms) + "\n";
    }

    // Returns false when the family product is not uniform in the indices.
    bool pattern(int a, int b, std::vector<std::string>& terms) const {
        const auto& fa = fam_[a];
        const auto& fb = fam_[b];
        const std::string ia = fa.info->indexed ? "i" : "";
        const std::string ib = fb.info->indexed ? (fa.info->indexed ? "j" : "i") : "";
        std::string sum_expr = ia.empty() ? ib : (ib.empty() ? ia : ia + "+" + ib);
        const std::string fresh = ia.empty() && ib.empty() ? "i" : "m";

        for (const auto& fc : fam_) {
            const int mod = static_cast<int>(fc.members.size());
            if (!fc.info->indexed) {
                int c = -1;
                for (int x : fa.members)
                    for (int y : fb.members) {
                        int m = 0;
                        for (int z : fc.members) m += at(x, y, z).upper;
                        if (c >= 0 && m != c) return false;
                        c = m;
                    }
                if (c > 0) {
                    if (fc.members.size() != 1) return false;
                    terms.push_back(coeff_prefix(c) + render(fc.info->display, ""));
                }
                continue;
            }
            // Indexed target: either c at index sum_expr, or c on every index.
            bool at_sum = !sum_expr.empty(), uniform = true;
            int c_sum = -1, c_uni = -1;
            for (int x : fa.members)
                for (int y : fb.members) {
                    const int s = (fa.info->indexed ? r_.modules[x].index.value_or(0) : 0) +
                                  (fb.info->indexed ? r_.modules[y].index.value_or(0) : 0);
                    for (int z : fc.members) {
                        const int m = at(x, y, z).upper;
                        const bool hit = mod > 0 && ((r_.modules[z].index.value_or(0) - s) % mod + mod) % mod == 0;
                        if (hit) {
                            if (c_sum >= 0 && m != c_sum) at_sum = false;
                            c_sum = m;
                        } else if (m != 0) {
                            at_sum = false;
                        }
                        if (c_uni >= 0 && m != c_uni) uniform = false;
                        c_uni = m;
                    }
                }
            if (c_uni == 0 && uniform) continue;
            if (at_sum && c_sum > 0) {
                terms.push_back(coeff_prefix(c_sum) + render(fc.info->display, sum_expr));
            } else if (uniform) {
                terms.push_back(coeff_prefix(c_uni) + "sum_{" + fresh + "=0}^{" + std::to_string(mod - 1) + "} " +
                                render(fc.info->display, fresh));
            } else {
                return false;
            }
        }
        return true;
    }

    std::string family_product(int a, int b) const {
        const auto& fa = fam_[a];
        const auto& fb = fam_[b];
        if (fa.members.empty() || fb.members.empty()) return "";
        bool determined = true;
        for (int x : fa.members)
            for (int y : fb.members)
                for (int z = 0; z < static_cast<int>(r_.modules.size()); ++z)
                    determined = determined && at(x, y, z).verdict == Verdict::determined;
        std::vector<std::string> terms;
        if (determined && pattern(a, b, terms)) {
            const std::string ia = fa.info->indexed ? "i" : "";
            const std::string ib = fb.info->indexed ? (fa.info->indexed ? "j" : "i") : "";
            return render(fa.info->display, ia) + " x " + render(fb.info->display, ib) + " = " + join_terms(terms) +
                   "\n";
        }
        std::string s;
        for (int x : fa.members)
            for (int y : fb.members) s += concrete_line(x, y);
        return s;
    }
};

}  // namespace

std::string emit(const FusionTable& t, const ModuleRegistry& r, EmitFormat f) {
    if (f == EmitFormat::text) return t.entries.empty() ? std::string() : TextEmitter(t, r).run();
    std::ostringstream out;
    out << "l1,l2,l3,multiplicity,verdict\n";
    for (const auto& e : t.entries) {
        if (e.upper == 0) continue;
        out << e.l1 << ',' << e.l2 << ',' << e.l3 << ',' << multiplicity(e) << ',' << to_string(e.verdict) << '\n';
    }
    return out.str();
}

}  // namespace w3f
