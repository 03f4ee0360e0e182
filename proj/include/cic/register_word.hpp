#pragma once

#include <cstdint>

namespace cic {

// W-bit two's-complement register. Add and subtract wrap modulo 2^W, the
// way a hardware adder of that width drops its carry out.
class RegisterWord {
 public:
  explicit RegisterWord(int width, std::int64_t value = 0);

  int width() const noexcept { return width_; }
  std::int64_t value() const noexcept { return value_; }

  static std::int64_t min_value(int width) noexcept;
  static std::int64_t max_value(int width) noexcept;

  // Reduces any 64-bit pattern to the W-bit signed range.
  static std::int64_t wrap(std::uint64_t bits, int width) noexcept {
    const int shift = 64 - width;
    return static_cast<std::int64_t>(bits << shift) >> shift;
  }

  RegisterWord& operator+=(const RegisterWord& rhs) noexcept {
    value_ = wrap(static_cast<std::uint64_t>(value_) +
                      static_cast<std::uint64_t>(rhs.value_),
                  width_);
    return *this;
  }
  RegisterWord& operator-=(const RegisterWord& rhs) noexcept {
    value_ = wrap(static_cast<std::uint64_t>(value_) -
                      static_cast<std::uint64_t>(rhs.value_),
                  width_);
    return *this;
  }

  friend RegisterWord operator+(RegisterWord lhs, const RegisterWord& rhs) noexcept {
    return lhs += rhs;
  }
  friend RegisterWord operator-(RegisterWord lhs, const RegisterWord& rhs) noexcept {
    return lhs -= rhs;
  }
  friend bool operator==(const RegisterWord&, const RegisterWord&) = default;

 private:
  int width_;
  std::int64_t value_;
};

}  // namespace cic
