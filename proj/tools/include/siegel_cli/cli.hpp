#pragma once

#include <ostream>

namespace siegel::cli {

// Runs one command. Returns 0 on success, 1 on a domain error and 2 on a
// usage error; nothing is written to stdout/stderr except through the streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace siegel::cli
