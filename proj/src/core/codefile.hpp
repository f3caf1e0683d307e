#pragma once

#include "code_core.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rankmetric {

// Text format:
//   rankcode v1
//   q <p> <e> [c_0 ... c_e]
//   n <n> m <m>
//   matrix
//   <n rows of m entries>
//   ...
// Blank lines and '#' comments are ignored. Errors are ParseError with the
// offending line number.
RankMetricCode parse_code(std::istream& in);
RankMetricCode parse_code_string(const std::string& text);
RankMetricCode parse_code_file(const std::string& path);

// Canonical basis, one block per basis matrix. `comments` are emitted as
// '#' lines after the shape line.
std::string print_code(const RankMetricCode& c, const std::vector<std::string>& comments = {});

}  // namespace rankmetric
