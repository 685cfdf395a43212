#include "w3f/registry.hpp"

#include "w3f/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace w3f {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

QuadScalar scalar_field(const json& j) {
    if (j.is_number_integer()) return QuadScalar(j.get<long>());
    return parse_scalar(j.get<std::string>());
}

StableSet parse_set(const json& j, const FiniteGroup& g) {
    StableSet s;
    s.name = j.at("name").get<std::string>();
    s.labels = j.at("labels").get<std::vector<std::string>>();
    const json& act = j.at("action");
    for (const auto& l : s.labels) {
        const auto row = act.at(l).get<std::vector<std::string>>();
        if (static_cast<int>(row.size()) != g.order())
            throw ConfigError("set " + s.name + ": action row of " + l + " has wrong length");
        std::vector<int> r;
        for (const auto& x : row) r.push_back(s.index_of(x));
        s.action.push_back(std::move(r));
    }
    if (j.contains("cocycle")) {
        for (const auto& l : s.labels) {
            std::vector<std::vector<QuadScalar>> m;
            for (const auto& row : j["cocycle"].at(l)) {
                std::vector<QuadScalar> r;
                for (const auto& x : row) r.push_back(scalar_field(x));
                m.push_back(std::move(r));
            }
            s.cocycle.push_back(std::move(m));
        }
    }
    if (j.contains("coboundary")) {
        for (const auto& l : s.labels) {
            std::vector<QuadScalar> r;
            for (const auto& x : j["coboundary"].at(l)) r.push_back(scalar_field(x));
            s.coboundary.push_back(std::move(r));
        }
    }
    return s;
}

FiniteGroup parse_group(const json& j) {
    std::vector<std::string> names;
    if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
    if (j.contains("cyclic")) return FiniteGroup::cyclic(j["cyclic"].get<int>(), names);
    if (j.contains("table")) return FiniteGroup::from_table(j["table"].get<std::vector<std::vector<int>>>(), names);
    if (j.contains("permutations"))
        return FiniteGroup::from_permutations(j["permutations"].get<std::vector<std::vector<int>>>(), names);
    throw ConfigError("group needs one of cyclic, table, permutations");
}

PbwVector<QuadScalar> times_j(const PbwVector<QuadScalar>& v, int jpow, ModeAlgebra<QuadScalar>& alg) {
    std::vector<Mode> word(jpow, Mode{Gen::J, -1});
    return alg.apply_word(word, v);
}

}  // namespace

const GroupSetAlgebra& GroupConfig::algebra(const std::string& set) const {
    for (const auto& a : algebras)
        if (a.set().name == set) return a;
    throw ConfigError("unknown stable set '" + set + "'");
}

int ModuleRegistry::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < modules.size(); ++i)
        if (modules[i].name == name) return static_cast<int>(i);
    throw ConfigError("unknown module '" + name + "'");
}

const FamilyInfo* ModuleRegistry::family(const std::string& name) const {
    for (const auto& f : families)
        if (f.name == name) return &f;
    return nullptr;
}

std::vector<Term> flip_terms(std::vector<Term> terms) {
    for (auto& t : terms) {
        int js = 0;
        for (const auto& m : t.word) js += m.gen == Gen::J;
        if (js % 2) t.coeff = -t.coeff;
    }
    return terms;
}

GroupConfig load_group_config(const std::filesystem::path& path) {
    const json j = read_json(path);
    try {
        GroupConfig c;
        c.group = parse_group(j.at("group"));
        for (const auto& s : j.at("sets")) c.algebras.push_back(build_algebra(c.group, parse_set(s, c.group)));
        if (j.contains("fusion"))
            for (const auto& e : j["fusion"]) {
                std::array<std::string, 3> t{e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                                             e.at(2).get<std::string>()};
                c.data.fusion[t] = e.at(3).get<int>();
            }
        if (j.contains("iso_scalars"))
            for (const auto& e : j["iso_scalars"]) {
                const auto tr = e.at("triple").get<std::vector<std::string>>();
                if (tr.size() != 3) throw ConfigError("iso_scalars triple must have three labels");
                c.group.index_of(e.at("element").get<std::string>());
                c.data.iso_scalars[{e["element"].get<std::string>(), {tr[0], tr[1], tr[2]}}] =
                    scalar_field(e.at("value"));
            }
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

ModuleRegistry load_registry(const std::filesystem::path& path) {
    const json j = read_json(path);
    const auto dir = path.parent_path();
    ModuleRegistry r;
    try {
        if (j.contains("group_config")) r.group = load_group_config(dir / j["group_config"].get<std::string>());
        r.vacuum = j.value("vacuum", "");
        for (const auto& f : j.value("families", json::array()))
            r.families.push_back({f.at("name").get<std::string>(), f.at("display").get<std::string>(),
                                  f.value("indexed", false)});
        for (const auto& mj : j.value("modules", json::array())) {
            RegistryModule m;
            m.name = mj.at("name").get<std::string>();
            m.display = mj.value("display", m.name);
            m.contragredient = mj.value("contragredient", m.name);
            m.family = mj.value("family", m.name);
            if (mj.contains("index")) m.index = mj["index"].get<int>();

            std::map<std::string, std::vector<ParsedVector>> files;
            for (const auto& vj : mj.at("vectors")) {
                const auto file = (dir / vj.at("file").get<std::string>()).lexically_normal();
                auto it = files.find(file.string());
                if (it == files.end()) it = files.emplace(file.string(), read_vectors(file.string())).first;
                const int rec = vj.at("record").get<int>();
                if (rec < 1 || rec > static_cast<int>(it->second.size()))
                    throw ConfigError(m.name + ": record " + std::to_string(rec) + " not in " + file.string());
                const auto& pv = it->second[rec - 1];
                NamedVector nv{vj.at("name").get<std::string>(), file.string() + ":" + std::to_string(pv.line),
                               pv.terms};
                if (vj.value("flip_j", false)) nv.terms = flip_terms(std::move(nv.terms));
                m.vectors.push_back(std::move(nv));
            }

            if (mj.contains("params")) {
                m.params = {scalar_field(mj["params"].at("h")), scalar_field(mj["params"].at("k"))};
            } else {
                std::vector<std::vector<Term>> all;
                for (const auto& v : m.vectors) all.push_back(v.terms);
                auto res = solve_params(all);
                if (res.status != SolveStatus::isolated || res.solutions.size() != 1)
                    throw ConfigError(m.name + ": vectors do not determine (h, k) uniquely (" +
                                      to_string(res.status) + ", " + std::to_string(res.solutions.size()) +
                                      " solutions)");
                m.params = res.solutions.front();
                m.params_solved = true;
            }

            ModeAlgebra<QuadScalar> alg(m.params.h, m.params.k);
            std::map<std::string, PbwVector<QuadScalar>> canon;
            for (const auto& v : m.vectors) {
                auto rep = is_singular(v.terms, m.params);
                if (!rep.is_singular)
                    throw ConfigError(m.name + ": vector " + v.name + " (" + v.source + ") is not singular at " +
                                      to_string(m.params));
                canon[v.name] = rep.vector;
            }
            auto lookup = [&](const std::string& name) -> const PbwVector<QuadScalar>& {
                auto it = canon.find(name);
                if (it == canon.end()) throw ConfigError(m.name + ": unknown vector '" + name + "'");
                return it->second;
            };

            const json& zj = mj.at("zhu");
            m.zhu.name = m.name;
            m.zhu.params = m.params;
            m.zhu.truncation = zj.at("truncation").get<int>();
            if (zj.contains("eliminator")) m.zhu.eliminator = lookup(zj["eliminator"].get<std::string>());
            for (const auto& rj : zj.at("relations")) {
                const auto name = rj.at("vector").get<std::string>();
                const int jp = rj.value("jpow", 0);
                std::string label = jp == 0 ? name : (jp == 1 ? "J(-1)" : "J(-1)^" + std::to_string(jp)) + " " + name;
                m.zhu.relations.push_back({label, times_j(lookup(name), jp, alg)});
            }

            if (mj.contains("orbifold")) {
                const json& oj = mj["orbifold"];
                OrbifoldPlacement p{oj.at("set").get<std::string>(), oj.at("label").get<std::string>(), {}};
                for (const auto& x : oj.at("character")) p.character.push_back(scalar_field(x));
                if (!r.group) throw ConfigError(m.name + ": orbifold placement without group_config");
                r.group->algebra(p.set).set().index_of(p.label);
                if (static_cast<int>(p.character.size()) != r.group->group.order())
                    throw ConfigError(m.name + ": character needs one value per group element");
                m.orbifold = std::move(p);
            }
            r.modules.push_back(std::move(m));
        }
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    std::set<std::string> names;
    for (const auto& m : r.modules)
        if (!names.insert(m.name).second) throw ConfigError("duplicate module name '" + m.name + "'");
    if (!r.vacuum.empty()) r.index_of(r.vacuum);
    return r;
}

std::vector<TwistedCandidate> load_twisted(const std::filesystem::path& path) {
    const json j = read_json(path);
    std::vector<TwistedCandidate> out;
    try {
        for (const auto& e : j.at("candidates"))
            out.push_back({e.at("name").get<std::string>(), {scalar_field(e.at("h")), scalar_field(e.at("k"))}});
    } catch (const json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return out;
}

std::vector<std::string> check_contragredients(const ModuleRegistry& r) {
    std::vector<std::string> out;
    for (const auto& m : r.modules) {
        int p;
        try {
            p = r.index_of(m.contragredient);
        } catch (const ConfigError& e) {
            out.push_back(m.name + ": " + e.what());
            continue;
        }
        const auto& d = r.modules[p];
        if (d.contragredient != m.name)
            out.push_back(m.name + ": contragredient of " + d.name + " is " + d.contragredient + ", not " + m.name);
        if (d.params.h != m.params.h || d.params.k != -m.params.k)
            out.push_back(m.name + ": params " + to_string(m.params) + " and " + to_string(d.params) +
                          " are not related by k -> -k");
    }
    return out;
}

}  // namespace w3f
