#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "erco/cache.hpp"

namespace erco {

struct VerifyOptions {
    int threads = 1;
    CountCache* cache = nullptr;
};

const std::vector<std::string>& verify_suite_names();

// Runs one named invariant suite, streaming one line per check to `out`.
// Returns true iff every check passed; unknown names throw.
bool run_verify_suite(const std::string& name, const VerifyOptions& opts, std::ostream& out);

}  // namespace erco
