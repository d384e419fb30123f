#include "tlf/format.hpp"

#include <array>
#include <charconv>

namespace tlf
{

std::string format_number(double v)
{
    if (v == 0.0)
        return "0";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

} // namespace tlf
