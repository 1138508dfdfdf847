#pragma once

#include <iosfwd>
#include <string>

#include "pgg/reduction.hpp"

namespace pgg {

// Reduction map ("map-v1"):
//   map-v1
//   price <num>/<den>
//   epsilon <num>/<den>
//   l <int>
//   node <orig> <game>                                  (per circuit node)
//   gadget <gate> PURIFY d <i> chain <i1> ... <i_{2l+1}> (per PURIFY gate)

ReductionMap parse_map(std::istream& in);
ReductionMap parse_map_string(const std::string& text);
std::string serialize_map(const ReductionMap& map);

ReductionMap load_map(const std::string& path);

} // namespace pgg
