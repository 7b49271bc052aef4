#pragma once

#include <istream>
#include <ostream>

namespace lsa::cli {

// Runs one lsalloc command. Results go to `out` as JSON (CSV for bench),
// errors to `err` as a one-line JSON object. Returns 0 on success, 1 on
// usage or input errors, 2 on solver errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lsa::cli
