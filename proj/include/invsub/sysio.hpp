// Reading and writing systems as JSON objects
// {"field": p, "n": n, "dim": d, "T": [[...]], "U1": [[...]], "U2": [[...]]}.
#pragma once

#include <stdexcept>
#include <string>

#include "invsub/systems.hpp"

namespace invsub {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses a system exactly as written (no canonicalization), so violations
/// such as dependent rows stay visible. Throws FormatError on malformed input.
System parse_system(const std::string& text);
System load_system(const std::string& path);

std::string system_to_json(const System& s);
void save_system(const System& s, const std::string& path);

}  // namespace invsub
