#pragma once

#include <stdexcept>
#include <string>

namespace milq {

// Thrown for malformed input: parse failures, dimension mismatches, violated
// preconditions. The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace milq
