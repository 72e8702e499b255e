#include "plate/cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "plate/errors.hpp"

namespace plate::cli {

std::string fixed(double value, int places) {
  if (std::abs(value) < 0.5 * std::pow(10.0, -places)) value = 0.0;
  std::array<char, 512> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::fixed, places);
  if (ec != std::errc{}) throw Error("cannot format number");
  std::string out(buf.data(), ptr);
  if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos)
    out.erase(0, 1);
  return out;
}

}  // namespace plate::cli
