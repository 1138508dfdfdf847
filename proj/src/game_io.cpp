#include "pgg/game_io.hpp"

#include <fstream>
#include <sstream>

#include "pgg/errors.hpp"
#include "line_reader.hpp"

namespace pgg {

namespace {

std::uint32_t parse_index(const detail::Line& line, const std::string& token) {
    try {
        std::size_t used = 0;
        const unsigned long value = std::stoul(token, &used);
        if (used != token.size() || token[0] == '-') throw std::invalid_argument(token);
        if (value > 0xffffffffull) throw std::out_of_range(token);
        return static_cast<std::uint32_t>(value);
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected an index, got '" + token + "'");
    }
}

Rational parse_rational_token(const detail::Line& line, const std::string& token) {
    try {
        return Rational::parse(token);
    } catch (const ParseError& e) {
        throw ParseError(line.number, e.what());
    }
}

} // namespace

Game parse_game(std::istream& in) {
    const auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError("empty game file");
    if (lines[0].tokens != std::vector<std::string>{"pgg-v1"})
        throw ParseError(lines[0].number, "expected header 'pgg-v1'");

    bool have_nodes = false, have_price = false;
    std::uint32_t node_count = 0;
    Rational price;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto& kw = line.tokens[0];
        if (kw == "nodes" && line.tokens.size() == 2) {
            if (have_nodes) throw ParseError(line.number, "duplicate 'nodes' line");
            node_count = parse_index(line, line.tokens[1]);
            have_nodes = true;
        } else if (kw == "price" && line.tokens.size() == 2) {
            if (have_price) throw ParseError(line.number, "duplicate 'price' line");
            price = parse_rational_token(line, line.tokens[1]);
            have_price = true;
        } else if (kw == "edge" && line.tokens.size() == 3) {
            edges.emplace_back(parse_index(line, line.tokens[1]), parse_index(line, line.tokens[2]));
        } else {
            throw ParseError(line.number, "unrecognized line '" + kw + "'");
        }
    }
    if (!have_nodes) throw ParseError("missing 'nodes' line");
    if (!have_price) throw ParseError("missing 'price' line");
    try {
        return Game(node_count, price, edges);
    } catch (const Error& e) {
        throw ParseError(std::string("invalid game: ") + e.what());
    }
}

Game parse_game_string(const std::string& text) {
    std::istringstream in(text);
    return parse_game(in);
}

std::string serialize_game(const Game& game) {
    std::ostringstream out;
    out << "pgg-v1\n";
    out << "nodes " << game.node_count() << "\n";
    out << "price " << game.price().fraction_str() << "\n";
    for (const auto& [from, to] : game.edges()) out << "edge " << from << " " << to << "\n";
    return out.str();
}

StrategyProfile parse_profile(std::istream& in, std::size_t node_count) {
    const auto lines = detail::read_lines(in);
    std::vector<Rational> values(node_count);
    std::vector<bool> seen(node_count, false);
    for (const auto& line : lines) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected '<node> <num>/<den>'");
        const std::uint32_t node = parse_index(line, line.tokens[0]);
        if (node >= node_count)
            throw ParseError(line.number, "node " + std::to_string(node) + " out of range");
        if (seen[node])
            throw ParseError(line.number, "duplicate entry for node " + std::to_string(node));
        values[node] = parse_rational_token(line, line.tokens[1]);
        seen[node] = true;
    }
    for (std::size_t i = 0; i < node_count; ++i)
        if (!seen[i]) throw ParseError("missing entry for node " + std::to_string(i));
    return StrategyProfile{std::move(values)};
}

StrategyProfile parse_profile_string(const std::string& text, std::size_t node_count) {
    std::istringstream in(text);
    return parse_profile(in, node_count);
}

std::string serialize_profile(const StrategyProfile& profile) {
    std::ostringstream out;
    for (std::size_t i = 0; i < profile.s.size(); ++i)
        out << i << " " << profile.s[i].fraction_str() << "\n";
    return out.str();
}

Game load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open game file '" + path + "'");
    return parse_game(in);
}

StrategyProfile load_profile(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file '" + path + "'");
    return parse_profile(in, node_count);
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << content;
}

} // namespace pgg
