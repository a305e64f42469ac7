#include "cubical/common.hpp"

namespace cubical {

namespace {
std::string with_position(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0) return msg;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + msg;
}
}  // namespace

InputError::InputError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(with_position(msg, line, column)), line_(line), column_(column) {}

}  // namespace cubical
