#pragma once

#include <stdexcept>
#include <string>

namespace roughteam {

/// Bad input: malformed files, schema violations, out-of-range arguments.
/// The CLI maps this to exit code 1; anything else unexpected maps to 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace roughteam
