#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsm {

// Malformed input file; carries the 1-based line where parsing gave up.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Scan or field contains no detectable signal (all values below threshold).
class NoSignalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File system failure; message includes the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dsm
