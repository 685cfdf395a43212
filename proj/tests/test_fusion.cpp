#include "w3f/fusion.hpp"
#include "w3f/registry.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace w3f;

namespace {

const std::string kConfigs = std::string(W3F_SOURCE_DIR) + "/configs/";

const ModuleRegistry& registry() {
    static const ModuleRegistry r = load_registry(kConfigs + "registry.json");
    return r;
}

const FusionTable& table() {
    static const FusionTable t = build_table(registry(), nullptr, Execution::parallel);
    return t;
}

int mult(const std::string& a, const std::string& b, const std::string& c) {
    const auto* e = table().find(a, b, c);
    REQUIRE(e != nullptr);
    REQUIRE(e->verdict == Verdict::determined);
    return e->upper;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

const std::vector<std::string> kM0{"M0_0", "M0_1", "M0_2"}, kW0{"W0_0", "W0_1", "W0_2"};

}  // namespace

TEST_SUITE("registry") {
    TEST_CASE("parameters are recovered from the corpus") {
        const auto& r = registry();
        REQUIRE(r.modules.size() == 8);
        const std::map<std::string, std::pair<std::string, std::string>> expect{
            {"M0_0", {"0", "0"}},      {"M0_1", {"2", "12*s3"}},     {"M0_2", {"2", "-12*s3"}},
            {"W0_0", {"8/5", "0"}},    {"W0_1", {"3/5", "-2*s3"}},   {"W0_2", {"3/5", "2*s3"}},
            {"Ma", {"1/2", "0"}},      {"Wa", {"1/10", "0"}}};
        for (const auto& m : r.modules) {
            CAPTURE(m.name);
            CHECK(m.params_solved);
            CHECK(m.params == ModuleParams{parse_scalar(expect.at(m.name).first), parse_scalar(expect.at(m.name).second)});
        }
    }

    TEST_CASE("contragredient involution") {
        CHECK(check_contragredients(registry()).empty());
        auto r = registry();
        r.modules[r.index_of("M0_1")].contragredient = "M0_1";
        CHECK(check_contragredients(r).size() >= 2);
    }

    TEST_CASE("flip_terms") {
        const auto t = flip_terms(parse_vector("2*L(-1)*J(-1) + J(-1)^2 + L(-2)"));
        CHECK(t[0].coeff == QuadScalar(-2));
        CHECK(t[1].coeff == QuadScalar(1));
        CHECK(t[2].coeff == QuadScalar(1));
    }

    TEST_CASE("configuration errors name the problem") {
        const auto bad = temp_file("w3f_bad_registry.json", R"({"modules": [{"name": "X", "vectors": []}]})");
        CHECK_THROWS_AS(load_registry(bad), ConfigError);
        CHECK_THROWS_AS(load_registry(kConfigs + "missing.json"), ConfigError);
        temp_file("w3f_l1.txt", "L(-1)\n");
        const auto notsing = temp_file("w3f_notsing.json", R"({"modules": [{"name": "X",
            "vectors": [{"name": "v", "file": "w3f_l1.txt", "record": 1}], "params": {"h": "1", "k": "0"},
            "zhu": {"truncation": 1, "relations": []}}]})");
        CHECK_THROWS_WITH_AS(load_registry(notsing), doctest::Contains("not singular"), ConfigError);
    }
}

TEST_SUITE("fusion") {
    TEST_CASE("vacuum row is the identity") {
        for (const auto& l2 : table().modules)
            for (const auto& l3 : table().modules) CHECK(mult("M0_0", l2, l3) == (l2 == l3 ? 1 : 0));
    }

    TEST_CASE("W^{0(1)} x M^{0(i)} = W^{0(1+i)}") {
        for (int i = 0; i < 3; ++i)
            for (const auto& l3 : table().modules) CHECK(mult("W0_1", kM0[i], l3) == (l3 == kW0[(1 + i) % 3] ? 1 : 0));
    }

    TEST_CASE("M^a x M^a") {
        for (const auto& l3 : table().modules) CHECK(mult("Ma", "Ma", l3) == (l3 == "Ma" ? 2 : l3[0] == 'M' ? 1 : 0));
    }

    TEST_CASE("row totals") {
        auto total = [](const std::string& a, const std::string& b) {
            int s = 0;
            for (const auto& l3 : table().modules) s += mult(a, b, l3);
            return s;
        };
        CHECK(total("Wa", "Wa") == 10);
        CHECK(total("Ma", "Wa") == 5);
        CHECK(total("W0_2", "W0_2") == 2);
        CHECK(total("W0_1", "Wa") == 2);
    }

    TEST_CASE("sandwich and symmetry") {
        for (const auto& e : table().entries) {
            CHECK(e.verdict == Verdict::determined);
            CHECK(e.lower <= e.upper);
            CHECK(e.lower_direct <= e.lower);
        }
        CHECK(check_symmetries(table(), registry()).empty());
    }

    TEST_CASE("swap symmetry on a concrete pair") {
        for (const auto& l3 : table().modules) CHECK(mult("M0_1", "W0_2", l3) == mult("W0_2", "M0_1", l3));
    }

    TEST_CASE("serial and parallel sweeps agree") {
        const auto s = build_table(registry(), nullptr, Execution::serial);
        REQUIRE(s.entries.size() == table().entries.size());
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            CHECK(s.entries[i].upper == table().entries[i].upper);
            CHECK(s.entries[i].lower == table().entries[i].lower);
        }
    }

    TEST_CASE("text emit uses family rows") {
        const auto text = emit(table(), registry(), EmitFormat::text);
        std::istringstream in(text);
        std::vector<std::string> lines;
        for (std::string l; std::getline(in, l);) lines.push_back(l);
        REQUIRE(lines.size() == 11);
        CHECK(lines[0] == "W x L = L");
        CHECK(lines[1] == "M_k^{0(i)} x M_k^{0(j)} = M_k^{0(i+j)}");
        CHECK(lines[3] == "W_k^{0(i)} x W_k^{0(j)} = M_k^{0(i+j)} + W_k^{0(i+j)}");
        CHECK(lines[7] == "W_k^{0(i)} x W_k^a = M_k^a + W_k^a");
        CHECK(lines[8] == "M_k^a x M_k^a = sum_{i=0}^{2} M_k^{0(i)} + 2 M_k^a");
    }

    TEST_CASE("records emit") {
        const auto rec = emit(table(), registry(), EmitFormat::records);
        CHECK(rec.rfind("l1,l2,l3,multiplicity,verdict\n", 0) == 0);
        CHECK(rec.find("Wa,Wa,Wa,2,determined") != std::string::npos);
        CHECK(rec.find("M0_0,M0_1,M0_2,") == std::string::npos);
        int rows = -1;
        for (char c : rec) rows += c == '\n';
        // Nonzero entries per family product, over ordered pairs:
        // M0M0 9, M0W0 18, W0W0 9*2, M0Ma 6, M0Wa 6, W0Ma 6, W0Wa 6*2, MaMa 4, MaWa 2*4, WaWa 8.
        CHECK(rows == 95);
    }

    TEST_CASE("twisted candidates are checked when supplied") {
        CHECK_FALSE(table().twisted_checked);
        const auto p = temp_file("w3f_twisted.json",
                                 R"({"candidates": [{"name": "T", "h": "1/15", "k": "1/3*s3"}]})");
        const auto tw = load_twisted(p);
        const auto t = build_table(registry(), &tw);
        CHECK(t.twisted_checked);
        int twisted = 0;
        for (const auto& e : t.entries)
            if (e.twisted) {
                ++twisted;
                CHECK(e.upper >= 0);
            }
        CHECK(twisted == 64);
    }

    TEST_CASE("empty registry") {
        const auto t = build_table(ModuleRegistry{});
        CHECK(t.entries.empty());
        CHECK_FALSE(t.warnings.empty());
        CHECK(emit(t, ModuleRegistry{}, EmitFormat::text).empty());
    }
}
