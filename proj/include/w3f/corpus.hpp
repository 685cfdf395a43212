#pragma once

#include "w3f/modes.hpp"

#include <string>
#include <vector>

namespace w3f {

// One vector per record; records are separated by blank lines, '#' starts a comment.
struct Record {
    std::string text;
    int line = 0;  // first line of the record, 1-based
};

std::vector<Record> split_records(const std::string& content);
std::vector<Record> read_records(const std::string& path);

struct ParsedVector {
    std::vector<Term> terms;
    int line = 0;
};

// Parse errors are rethrown with the record's line number.
std::vector<ParsedVector> read_vectors(const std::string& path);

}  // namespace w3f
