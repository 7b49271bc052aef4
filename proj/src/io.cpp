#include "lsa/io.hpp"

#include <fstream>
#include <sstream>

#include "lsa/error.hpp"

namespace lsa::io {

namespace {

int read_order(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw InputError("missing field 'n'");
  const json& n = j.at("n");
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw InputError("field 'n' must be a positive integer");
  }
  return n.get<int>();
}

long long read_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<long long>();
}

const json& read_array(const json& v, std::size_t expected, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  if (v.size() != expected) {
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(expected));
  }
  return v;
}

}  // namespace

Instance instance_from_json(const json& j) {
  const int n = read_order(j);
  if (!j.contains("values")) throw InputError("missing field 'values'");
  const auto un = static_cast<std::size_t>(n);
  const json& agents = read_array(j.at("values"), un, "values");
  std::vector<Value> values;
  values.reserve(un * un * un);
  for (const json& items : agents) {
    for (const json& rounds : read_array(items, un, "values[agent]")) {
      for (const json& v : read_array(rounds, un, "values[agent][item]")) {
        const long long x = read_int(v, "valuation");
        if (x < 0) throw InputError("valuations must be non-negative");
        values.push_back(x);
      }
    }
  }
  return Instance(n, std::move(values));
}

json to_json(const Instance& inst) {
  const int n = inst.n();
  json values = json::array();
  for (int i = 0; i < n; ++i) {
    json items = json::array();
    for (int j = 0; j < n; ++j) {
      json rounds = json::array();
      for (int k = 0; k < n; ++k) rounds.push_back(inst.value(i, j, k));
      items.push_back(std::move(rounds));
    }
    values.push_back(std::move(items));
  }
  return json{{"n", n}, {"values", std::move(values)}};
}

Allocation allocation_from_json(const json& j) {
  const int n = read_order(j);
  if (!j.contains("grid")) throw InputError("missing field 'grid'");
  const auto un = static_cast<std::size_t>(n);
  Allocation a(n);
  int item = 0;
  for (const json& row : read_array(j.at("grid"), un, "grid")) {
    int round = 0;
    for (const json& v : read_array(row, un, "grid[item]")) {
      const long long agent = read_int(v, "grid entry");
      if (agent < 0 || agent > n) throw InputError("grid entry out of range [0, n]");
      a.assign(item, round, agent == 0 ? kEmpty : static_cast<int>(agent - 1));
      ++round;
    }
    ++item;
  }
  return a;
}

json to_json(const Allocation& a) {
  const int n = a.n();
  json grid = json::array();
  for (int j = 0; j < n; ++j) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(a.empty_at(j, k) ? 0 : a.at(j, k) + 1);
    grid.push_back(std::move(row));
  }
  return json{{"n", n}, {"grid", std::move(grid)}};
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

Instance read_instance(const std::string& path) { return instance_from_json(read_file(path)); }

Allocation read_allocation(const std::string& path) {
  return allocation_from_json(read_file(path));
}

}  // namespace lsa::io
