#include "pgg/map_io.hpp"

#include <algorithm>
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

void validate_map(const ReductionMap& map) {
    const std::uint32_t l = map.params.chain_l;
    if (l != chain_length(map.params.price, map.params.epsilon))
        throw ParseError("l = " + std::to_string(l) + " is not the minimal chain length for p = " +
                         map.params.price.str() + ", eps = " + map.params.epsilon.str());
    const std::uint32_t total = map.game_node_count();
    std::vector<std::uint32_t> used;
    used.reserve(total);
    for (std::uint32_t game_node : map.original_to_game) used.push_back(game_node);
    for (const PurifyGadget& gadget : map.purify_gadgets) {
        if (gadget.chain.size() != 2 * static_cast<std::size_t>(l) + 1)
            throw ParseError("gadget for gate " + std::to_string(gadget.gate) + " has " +
                             std::to_string(gadget.chain.size()) + " chain nodes, expected " +
                             std::to_string(2 * l + 1));
        used.push_back(gadget.d);
        for (std::uint32_t c : gadget.chain) used.push_back(c);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        throw ParseError("map assigns one game node to two roles");
    if (!used.empty() && used.back() >= total)
        throw ParseError("map references game node " + std::to_string(used.back()) +
                         " but only " + std::to_string(total) + " nodes exist");
}

} // namespace

ReductionMap parse_map(std::istream& in) {
    const auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError("empty map file");
    if (lines[0].tokens != std::vector<std::string>{"map-v1"})
        throw ParseError(lines[0].number, "expected header 'map-v1'");

    ReductionMap map;
    bool have_price = false, have_epsilon = false, have_l = false;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> nodes; // (orig, game)
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "price" && t.size() == 2) {
            map.params.price = Rational::parse(t[1]);
            have_price = true;
        } else if (t[0] == "epsilon" && t.size() == 2) {
            map.params.epsilon = Rational::parse(t[1]);
            have_epsilon = true;
        } else if (t[0] == "l" && t.size() == 2) {
            map.params.chain_l = parse_index(line, t[1]);
            have_l = true;
        } else if (t[0] == "node" && t.size() == 3) {
            nodes.emplace_back(parse_index(line, t[1]), parse_index(line, t[2]));
        } else if (t[0] == "gadget" && t.size() >= 6 && t[2] == "PURIFY") {
            // gadget <gate> PURIFY d <i> chain <i1> ...
            if (t[3] != "d" || t[5] != "chain")
                throw ParseError(line.number, "malformed gadget line");
            PurifyGadget gadget;
            gadget.gate = parse_index(line, t[1]);
            gadget.d = parse_index(line, t[4]);
            for (std::size_t k = 6; k < t.size(); ++k)
                gadget.chain.push_back(parse_index(line, t[k]));
            if (gadget.chain.empty()) throw ParseError(line.number, "gadget has no chain nodes");
            map.purify_gadgets.push_back(std::move(gadget));
        } else {
            throw ParseError(line.number, "unrecognized line '" + t[0] + "'");
        }
    }
    if (!have_price || !have_epsilon || !have_l)
        throw ParseError("missing price, epsilon or l line");

    map.original_to_game.resize(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    for (const auto& [orig, game_node] : nodes) {
        if (orig >= nodes.size()) throw ParseError("circuit node " + std::to_string(orig) +
                                                   " out of range");
        if (seen[orig]) throw ParseError("duplicate map entry for circuit node " +
                                         std::to_string(orig));
        map.original_to_game[orig] = game_node;
        seen[orig] = true;
    }
    validate_map(map);
    return map;
}

ReductionMap parse_map_string(const std::string& text) {
    std::istringstream in(text);
    return parse_map(in);
}

std::string serialize_map(const ReductionMap& map) {
    std::ostringstream out;
    out << "map-v1\n";
    out << "price " << map.params.price.fraction_str() << "\n";
    out << "epsilon " << map.params.epsilon.fraction_str() << "\n";
    out << "l " << map.params.chain_l << "\n";
    for (std::size_t orig = 0; orig < map.original_to_game.size(); ++orig)
        out << "node " << orig << " " << map.original_to_game[orig] << "\n";
    for (const PurifyGadget& gadget : map.purify_gadgets) {
        out << "gadget " << gadget.gate << " PURIFY d " << gadget.d << " chain";
        for (std::uint32_t c : gadget.chain) out << " " << c;
        out << "\n";
    }
    return out.str();
}

ReductionMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file '" + path + "'");
    return parse_map(in);
}

} // namespace pgg
