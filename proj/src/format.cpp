#include "epl/format.hpp"

#include <charconv>

namespace epl {

std::string format_fixed6(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed, 6);
    return std::string(buffer, result.ptr);
}

}  // namespace epl
