#pragma once

#include <iosfwd>
#include <string>

#include "ccmotion/config.hpp"

namespace cc {

// CCF text format: line 1 "ccf 1", line 2 "n=<int> r=<int>", then n lines of
// n space-separated color ids.  write_ccf o read_ccf is the identity.
// Throws Error(parse_error) on malformed input; the parsed matrix is run
// through the full Configuration validation.
Configuration read_ccf(std::istream& in);
Configuration read_ccf_file(const std::string& path);

void write_ccf(std::ostream& out, const Configuration& cfg);
void write_ccf_file(const std::string& path, const Configuration& cfg);

}  // namespace cc
