#pragma once

// JSON wire formats. Externally agents, items and rounds are 1-based and an
// empty cell is written as 0:
//   Instance:   {"n": <int>, "values": [[[<int>]]]}   values[agent][item][round]
//   Allocation: {"n": <int>, "grid": [[<int>]]}        grid[item][round]

#include <string>

#include <json.hpp>

#include "lsa/instance.hpp"

namespace lsa::io {

using json = nlohmann::json;

Instance instance_from_json(const json& j);
json to_json(const Instance& inst);

Allocation allocation_from_json(const json& j);
json to_json(const Allocation& a);

// Strict parse of a whole document; throws InputError on malformed text or
// trailing data.
json parse_document(const std::string& text);

json read_file(const std::string& path);

Instance read_instance(const std::string& path);
Allocation read_allocation(const std::string& path);

}  // namespace lsa::io
