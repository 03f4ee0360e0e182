#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cic {

using BigInt = boost::multiprecision::cpp_int;

// Largest register width the bit-exact engine supports.
inline constexpr int kMaxRegisterWidth = 64;

/// Parameters of an N-stage CIC decimator.
///
/// `stages` (N) integrator/comb pairs, decimation `rate` (R), comb
/// `diff_delay` (M, counted in output-rate samples) and `input_bits` (B) of
/// signed two's-complement input.
struct CicConfig {
  int stages = 1;
  int rate = 1;
  int diff_delay = 1;
  int input_bits = 1;

  /// Kernel length D = R * M.
  std::int64_t decimation_length() const {
    return static_cast<std::int64_t>(rate) * diff_delay;
  }

  friend bool operator==(const CicConfig&, const CicConfig&) = default;
};

struct ValidatedConfig {
  CicConfig config;
  // Set when M is outside {1, 2}: legal, but outside the usual design range.
  std::optional<std::string> warning;
};

/// Checks every field is positive. Throws ConfigError naming the first bad
/// field.
ValidatedConfig validate(const CicConfig& config);

/// DC gain (R*M)^N, exact.
BigInt gain(const CicConfig& config);

/// Register width W = B + ceil(N * log2(R*M)) that makes every output of the
/// wrapping engine equal to the exact result.
int required_width(const CicConfig& config);

std::string to_string(const CicConfig& config);

}  // namespace cic
