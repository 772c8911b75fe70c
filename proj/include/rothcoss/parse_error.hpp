#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rothcoss {

/// Syntax error with a 1-based source position and the tokens that would
/// have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column,
               std::vector<std::string> expected = {});

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
};

}  // namespace rothcoss
