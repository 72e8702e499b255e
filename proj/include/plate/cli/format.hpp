#pragma once

#include <string>

namespace plate::cli {

/// Fixed-point text with `places` decimals; never prints "-0.000".
std::string fixed(double value, int places);

}  // namespace plate::cli
