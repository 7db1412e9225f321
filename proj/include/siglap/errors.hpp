#pragma once

#include <stdexcept>
#include <string>

namespace siglap {

/// Input file/text could not be parsed; message carries a line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A numeric iteration failed to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace siglap
