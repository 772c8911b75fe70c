#include "rothcoss/parse_error.hpp"

#include <sstream>

namespace rothcoss {

namespace {

std::string format_message(const std::string& message, std::size_t line, std::size_t column,
                           const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << line << ':' << column << ": " << message;
    if (!expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            os << (i == 0 ? "" : (i + 1 == expected.size() ? " or " : ", ")) << expected[i];
        }
        os << ')';
    }
    return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : std::runtime_error(format_message(message, line, column, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace rothcoss
