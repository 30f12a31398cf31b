#pragma once

#include <stdexcept>
#include <string>

namespace usg {

// Bad input data or files. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant. The CLI maps this (and any other exception) to exit code 2.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace usg
