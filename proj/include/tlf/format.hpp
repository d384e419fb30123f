#pragma once

#include <string>

namespace tlf
{

// Shortest decimal text that parses back to the same double ("0.25", "6").
[[nodiscard]] std::string format_number(double v);

} // namespace tlf
