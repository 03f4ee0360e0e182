#include "cic/register_word.hpp"

#include <string>

#include "cic/config.hpp"
#include "cic/errors.hpp"

namespace cic {

RegisterWord::RegisterWord(int width, std::int64_t value) : width_(width) {
  if (width < 1 || width > kMaxRegisterWidth) {
    throw WidthError("register width must be in [1, 64], got " +
                     std::to_string(width));
  }
  value_ = wrap(static_cast<std::uint64_t>(value), width);
}

std::int64_t RegisterWord::min_value(int width) noexcept {
  return wrap(std::uint64_t{1} << (width - 1), width);
}

std::int64_t RegisterWord::max_value(int width) noexcept {
  return wrap((std::uint64_t{1} << (width - 1)) - 1, width);
}

}  // namespace cic
