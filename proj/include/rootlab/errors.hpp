#pragma once

#include <stdexcept>
#include <string>

namespace rootlab {

// Malformed or inadmissible user input: bad descriptors, unknown diagram
// parameters, unparseable formulas or files.  The CLI maps this to exit 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that parses but is mathematically inconsistent: involution pairs
// whose restriction is not reflection-closed, fibers whose Step-3/4 values
// disagree, diagram data admitting zero or several involutions.
class StructuralError : public InputError {
public:
    explicit StructuralError(const std::string& msg) : InputError(msg) {}
};

// Catalog rows that cannot be instantiated at the given parameters
// (no condition holds, or several sibling conditions hold at once).
class DataError : public InputError {
public:
    explicit DataError(const std::string& msg) : InputError(msg) {}
};

// Checked 64-bit rational arithmetic left the representable range.  All
// shipped computations stay far inside it; this guards user-supplied data.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rootlab
