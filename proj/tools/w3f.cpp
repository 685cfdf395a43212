#include "w3f/corpus.hpp"
#include "w3f/fusion.hpp"
#include "w3f/group.hpp"
#include "w3f/registry.hpp"
#include "w3f/singular.hpp"
#include "w3f/zhu.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace w3f;

namespace {

// Key-value file: lines "h = <scalar>" and "k = <scalar>", '#' comments.
ModuleParams read_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::optional<QuadScalar> h, k;
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
        line = line.substr(0, line.find('#'));
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        const QuadScalar v = parse_scalar(line.substr(eq + 1));
        if (key == "h")
            h = v;
        else if (key == "k")
            k = v;
        else
            throw ConfigError(path + ":" + std::to_string(n) + ": unknown key '" + key + "'");
    }
    if (!h || !k) throw ConfigError(path + ": both h and k are required");
    return {*h, *k};
}

std::vector<ParsedVector> load_vectors(const std::string& path, bool flip) {
    auto v = read_vectors(path);
    if (flip)
        for (auto& p : v) p.terms = flip_terms(std::move(p.terms));
    return v;
}

const char* zero_flag(const PbwVector<QuadScalar>& r) { return r.is_zero() ? "0" : "nonzero"; }

int verify_singular(const std::string& params_path, const std::string& vectors_path, bool flip) {
    const auto p = read_params(params_path);
    const auto vectors = load_vectors(vectors_path, flip);
    int failures = 0;
    std::cout << "record,line,degree,L(1),L(2),J(1),singular\n";
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const auto r = is_singular(vectors[i].terms, p);
        std::cout << i + 1 << ',' << vectors[i].line << ',' << r.degree << ',' << zero_flag(r.residuals[0]) << ','
                  << zero_flag(r.residuals[1]) << ',' << zero_flag(r.residuals[2]) << ','
                  << (r.is_singular ? "yes" : "no") << '\n';
        failures += !r.is_singular;
    }
    return failures ? 1 : 0;
}

int singular_space_cmd(int degree, const std::string& h, const std::string& k, bool serial) {
    const ModuleParams p{parse_scalar(h), parse_scalar(k)};
    const auto space = singular_space(degree, p, serial ? Execution::serial : Execution::parallel);
    std::cout << "degree " << degree << " params " << to_string(p) << " dim " << space.size() << '\n';
    for (const auto& v : space) std::cout << to_string(v) << '\n';
    return 0;
}

void print_solution(const SolveResult& r) {
    std::cout << "status " << to_string(r.status) << '\n';
    for (const auto& s : r.solutions) std::cout << "solution " << to_string(s) << '\n';
    for (const auto& w : r.warnings) std::cout << "warning " << w << '\n';
}

int solve_params_cmd(const std::string& vectors_path, bool flip) {
    const auto vectors = load_vectors(vectors_path, flip);
    std::vector<std::vector<Term>> all;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::cout << "# record " << i + 1 << " (line " << vectors[i].line << ")\n";
        print_solution(solve_params(vectors[i].terms));
        all.push_back(vectors[i].terms);
    }
    std::cout << "# joint\n";
    const auto joint = solve_params(all);
    print_solution(joint);
    return joint.status == SolveStatus::isolated ? 0 : 1;
}

int zhu_bound_cmd(const std::string& module, const std::string& left, const std::string& right,
                  const std::string& config) {
    const auto reg = load_registry(config);
    const auto& n = reg.modules[reg.index_of(module)];
    const auto& l3 = reg.modules[reg.index_of(left)];
    const auto& l2 = reg.modules[reg.index_of(right)];
    const auto rel = relation_matrix(n.zhu, numeric_context(l2.params, l3.params));
    const int rk = rank(rel.rows);
    std::cout << "module " << n.name << " left " << l3.name << ' ' << to_string(l3.params) << " right " << l2.name
              << ' ' << to_string(l2.params) << '\n';
    for (std::size_t i = 0; i < rel.rows.size(); ++i) {
        std::cout << "row " << rel.labels[i] << ':';
        for (const auto& x : rel.rows[i]) std::cout << " [" << to_string(x) << ']';
        std::cout << '\n';
    }
    std::cout << "generators " << rel.columns << " rank " << rk << " bound " << rel.columns - rk << '\n';
    return 0;
}

std::string describe(const GroupSetAlgebra& a, const SimpleModuleDescriptor& s) {
    std::string out = a.set().labels[s.rep] + "[";
    for (std::size_t i = 0; i < s.stabilizer.size(); ++i) {
        const int x = s.stabilizer[i];
        out += (i ? ", " : "") + a.group().name(x) + ":" + to_string(s.character[x]);
    }
    return out + "]";
}

int group_bound_cmd(const std::string& config, const std::string& s1, const std::string& s2, const std::string& s3,
                    const std::string& targets) {
    const auto c = load_group_config(config);
    const auto &a1 = c.algebra(s1), &a2 = c.algebra(s2), &a3 = c.algebra(s3);
    const auto m1 = simple_modules(a1), m2 = simple_modules(a2), m3 = simple_modules(a3);
    std::cout << "w1,w2,w3,lower_bound\n";
    int missing = 0;
    for (const auto& w1 : m1)
        for (const auto& w2 : m2) {
            IntertwinerModule mod;
            try {
                mod = intertwiner_module(a1, w1, a2, w2, a3, c.data);
            } catch (const MissingIsoScalar& e) {
                std::cerr << "skipped " << describe(a1, w1) << " x " << describe(a2, w2) << ": " << e.what() << '\n';
                ++missing;
                continue;
            }
            for (const auto& w3 : m3) {
                const int lb = lower_bound(a3, mod, w3);
                if (targets != "all" && lb == 0) continue;
                std::cout << describe(a1, w1) << ',' << describe(a2, w2) << ',' << describe(a3, w3) << ',' << lb
                          << '\n';
            }
        }
    return missing ? 1 : 0;
}

int fusion_table_cmd(const std::string& config, const std::string& format, const std::string& twisted_path,
                     bool serial) {
    const auto reg = load_registry(config);
    std::vector<TwistedCandidate> twisted;
    if (!twisted_path.empty()) twisted = load_twisted(twisted_path);
    const auto table = build_table(reg, twisted_path.empty() ? nullptr : &twisted,
                                   serial ? Execution::serial : Execution::parallel);
    std::cout << emit(table, reg, format == "records" ? EmitFormat::records : EmitFormat::text);
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';

    int violated = 0, gaps = 0;
    for (const auto& e : table.entries) {
        violated += e.verdict == Verdict::violated;
        gaps += e.verdict == Verdict::gap;
        if (e.verdict == Verdict::violated)
            std::cerr << "violated: N(" << e.l3 << "; " << e.l1 << ", " << e.l2 << ") lower " << e.lower
                      << " > upper " << e.upper << '\n';
        else if (e.verdict == Verdict::gap)
            std::cerr << "gap: N(" << e.l3 << "; " << e.l1 << ", " << e.l2 << ") in [" << e.lower << ", " << e.upper
                      << "]" << (e.error.empty() ? "" : " (" + e.error + ")") << '\n';
    }
    auto sym = check_symmetries(table, reg);
    auto duals = check_contragredients(reg);
    sym.insert(sym.end(), duals.begin(), duals.end());
    for (const auto& s : sym) std::cerr << "symmetry: " << s << '\n';
    std::cerr << "triples " << table.entries.size() << ", gaps " << gaps << ", violated " << violated
              << ", symmetry failures " << sym.size() << '\n';
    return violated || !sym.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular vectors, Zhu upper bounds and orbifold lower bounds for W(2,3) at c = 6/5"};
    app.require_subcommand(1);

    std::string params, vectors, h, k, module, left, right, config, s1, s2, s3, targets = "all", format = "text",
                                                                             twisted;
    int degree = 1;
    bool flip = false, serial = false;

    auto* vs = app.add_subcommand("verify-singular", "check that every vector in a corpus file is singular");
    vs->add_option("--params", params, "file with lines h = ..., k = ...")->required();
    vs->add_option("--vectors", vectors, "corpus file")->required();
    vs->add_flag("--flip-j", flip, "apply J(n) -> -J(n) to every vector");

    auto* ss = app.add_subcommand("singular-space", "basis of the singular vectors of a given degree");
    ss->set_help_flag("--help", "print this help message and exit");
    ss->add_option("--degree", degree)->required()->check(CLI::Range(1, 12));
    ss->add_option("--h", h)->required();
    ss->add_option("--k", k)->required();
    ss->add_flag("--serial", serial, "disable the OpenMP kernel");

    auto* sp = app.add_subcommand("solve-params", "recover (h, k) from singular vectors");
    sp->add_option("--vectors", vectors, "corpus file")->required();
    sp->add_flag("--flip-j", flip, "apply J(n) -> -J(n) to every vector");

    auto* zb = app.add_subcommand("zhu-bound", "upper bound from the relations of one module");
    zb->add_option("--module", module, "module N providing the relations")->required();
    zb->add_option("--left", left, "L3, acting on the left")->required();
    zb->add_option("--right", right, "L2, acting on the right")->required();
    zb->add_option("--config", config, "registry file")->required();

    auto* gb = app.add_subcommand("group-bound", "orbifold lower bounds between simple modules");
    gb->add_option("--config", config, "group config file")->required();
    gb->add_option("--s1", s1)->required();
    gb->add_option("--s2", s2)->required();
    gb->add_option("--s3", s3)->required();
    gb->add_option("--targets", targets, "all, or nonzero")->check(CLI::IsMember({"all", "nonzero"}));

    auto* ft = app.add_subcommand("fusion-table", "sweep all triples of the registry");
    ft->add_option("--config", config, "registry file")->required();
    ft->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));
    ft->add_option("--include-twisted", twisted, "JSON file with twisted-sector (h, k) candidates");
    ft->add_flag("--serial", serial, "disable the OpenMP sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*vs) return verify_singular(params, vectors, flip);
        if (*ss) return singular_space_cmd(degree, h, k, serial);
        if (*sp) return solve_params_cmd(vectors, flip);
        if (*zb) return zhu_bound_cmd(module, left, right, config);
        if (*gb) return group_bound_cmd(config, s1, s2, s3, targets);
        if (*ft) return fusion_table_cmd(config, format, twisted, serial);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
