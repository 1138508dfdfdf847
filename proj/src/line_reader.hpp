#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace pgg::detail {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

// Tokenized non-empty lines with `#` comments stripped.
inline std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        std::string token;
        while (words >> token) line.tokens.push_back(token);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

} // namespace pgg::detail
