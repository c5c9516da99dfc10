#pragma once

#include <stdexcept>
#include <string>

namespace rigidscene {

// Bad configuration: unknown fields, values outside documented ranges,
// invalid scene specs. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or inconsistent input data: missing files, parse failures,
// dimension mismatches, empty masks, invalid depths. CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimization diverged (loss increased for too many consecutive
// iterations) or gradients became non-finite. CLI exit code 4.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rigidscene
