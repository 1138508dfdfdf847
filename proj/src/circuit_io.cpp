#include "pgg/circuit_io.hpp"

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

} // namespace

CircuitInstance parse_circuit(std::istream& in) {
    const auto lines = detail::read_lines(in);
    if (lines.empty()) throw ParseError("empty circuit file");
    if (lines[0].tokens != std::vector<std::string>{"pc-v1"})
        throw ParseError(lines[0].number, "expected header 'pc-v1'");

    CircuitInstance instance;
    bool have_nodes = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "nodes" && t.size() == 2) {
            if (have_nodes) throw ParseError(line.number, "duplicate 'nodes' line");
            instance.node_count = parse_index(line, t[1]);
            have_nodes = true;
        } else if (t[0] == "gate" && t.size() == 6 && t[1] == "NOR" && t[4] == "->") {
            instance.gates.push_back(Gate::make_nor(parse_index(line, t[2]),
                                                    parse_index(line, t[3]),
                                                    parse_index(line, t[5])));
        } else if (t[0] == "gate" && t.size() == 6 && t[1] == "PURIFY" && t[3] == "->") {
            instance.gates.push_back(Gate::make_purify(parse_index(line, t[2]),
                                                       parse_index(line, t[4]),
                                                       parse_index(line, t[5])));
        } else {
            throw ParseError(line.number, "unrecognized line '" + t[0] + "'");
        }
    }
    if (!have_nodes) throw ParseError("missing 'nodes' line");
    return instance;
}

CircuitInstance parse_circuit_string(const std::string& text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

std::string serialize_circuit(const CircuitInstance& instance) {
    std::ostringstream out;
    out << "pc-v1\n";
    out << "nodes " << instance.node_count << "\n";
    for (const Gate& gate : instance.gates) {
        if (gate.type == GateType::nor)
            out << "gate NOR " << gate.u << " " << gate.v << " -> " << gate.w << "\n";
        else
            out << "gate PURIFY " << gate.u << " -> " << gate.v << " " << gate.w << "\n";
    }
    return out.str();
}

Assignment parse_assignment(std::istream& in, std::size_t node_count) {
    const auto lines = detail::read_lines(in);
    Assignment assignment;
    assignment.values.assign(node_count, Ternary::bot);
    std::vector<bool> seen(node_count, false);
    for (const auto& line : lines) {
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected '<node> <0|1|bot>'");
        const std::uint32_t node = parse_index(line, line.tokens[0]);
        if (node >= node_count)
            throw ParseError(line.number, "node " + std::to_string(node) + " out of range");
        if (seen[node])
            throw ParseError(line.number, "duplicate entry for node " + std::to_string(node));
        const std::string& value = line.tokens[1];
        if (value == "0") assignment.values[node] = Ternary::zero;
        else if (value == "1") assignment.values[node] = Ternary::one;
        else if (value == "bot") assignment.values[node] = Ternary::bot;
        else throw ParseError(line.number, "expected 0, 1 or bot, got '" + value + "'");
        seen[node] = true;
    }
    for (std::size_t i = 0; i < node_count; ++i)
        if (!seen[i]) throw ParseError("missing entry for node " + std::to_string(i));
    return assignment;
}

Assignment parse_assignment_string(const std::string& text, std::size_t node_count) {
    std::istringstream in(text);
    return parse_assignment(in, node_count);
}

std::string serialize_assignment(const Assignment& assignment) {
    std::ostringstream out;
    for (std::size_t i = 0; i < assignment.values.size(); ++i)
        out << i << " " << to_string(assignment.values[i]) << "\n";
    return out.str();
}

CircuitInstance load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open circuit file '" + path + "'");
    return parse_circuit(in);
}

Assignment load_assignment(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open assignment file '" + path + "'");
    return parse_assignment(in, node_count);
}

} // namespace pgg
