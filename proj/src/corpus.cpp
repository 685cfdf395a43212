#include "w3f/corpus.hpp"

#include <fstream>
#include <sstream>

namespace w3f {

std::vector<Record> split_records(const std::string& content) {
    std::vector<Record> out;
    std::istringstream in(content);
    std::string line;
    Record cur;
    int lineno = 0;
    auto flush = [&] {
        if (!cur.text.empty()) out.push_back(cur);
        cur = Record{};
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
            // A comment-only line neither ends nor starts a record.
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        if (cur.text.empty()) cur.line = lineno;
        else cur.text += ' ';
        cur.text += line;
    }
    flush();
    return out;
}

std::vector<Record> read_records(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return split_records(ss.str());
}

std::vector<ParsedVector> read_vectors(const std::string& path) {
    std::vector<ParsedVector> out;
    for (const auto& r : read_records(path)) {
        try {
            out.push_back({parse_vector(r.text), r.line});
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(r.line) + ": " + e.what(), e.position());
        }
    }
    return out;
}

}  // namespace w3f
