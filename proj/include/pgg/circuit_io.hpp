#pragma once

#include <iosfwd>
#include <string>

#include "pgg/circuit.hpp"

namespace pgg {

// Circuit ("pc-v1"):
//   pc-v1
//   nodes <n>
//   gate NOR <u> <v> -> <w>
//   gate PURIFY <u> -> <v> <w>
//
// Assignment: one line per node, `<node> <0|1|bot>`.

CircuitInstance parse_circuit(std::istream& in);
CircuitInstance parse_circuit_string(const std::string& text);
std::string serialize_circuit(const CircuitInstance& instance);

Assignment parse_assignment(std::istream& in, std::size_t node_count);
Assignment parse_assignment_string(const std::string& text, std::size_t node_count);
std::string serialize_assignment(const Assignment& assignment);

CircuitInstance load_circuit(const std::string& path);
Assignment load_assignment(const std::string& path, std::size_t node_count);

} // namespace pgg
