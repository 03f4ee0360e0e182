#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cic/config.hpp"
#include "cic/register_word.hpp"

namespace cic {

/// Streaming Hogenauer decimator: N integrators at the input rate, a
/// downsampler keeping every R-th value, then N combs with delay M at the
/// output rate.
///
/// All registers are W bits wide and wrap on overflow. Because the final
/// output always fits in W bits the wrap is lossless, so outputs match the
/// exact convolution returned by reference_decimate().
///
/// Output m is produced when input index m*R + R - 1 (0-based) is consumed.
/// One owner at a time; not safe for concurrent pushes.
class Decimator {
 public:
  /// Throws ConfigError for an invalid config and WidthError when
  /// width_override is below required_width(config) or the width exceeds 64.
  explicit Decimator(const CicConfig& config,
                     std::optional<int> width_override = std::nullopt);

  /// Feeds one B-bit sample. Returns the new output on every R-th call.
  /// Throws DomainError if x does not fit in B signed bits.
  std::optional<std::int64_t> push(std::int64_t x);

  /// Same as folding push() over samples; returns only emitted outputs.
  /// If any sample is out of range nothing is consumed.
  std::vector<std::int64_t> process(std::span<const std::int64_t> samples);

  /// Zeroes registers, delay lines, phase and counters.
  void reset();

  const CicConfig& config() const noexcept { return config_; }
  int width() const noexcept { return width_; }
  int phase() const noexcept { return phase_; }
  std::uint64_t samples_in() const noexcept { return samples_in_; }
  std::uint64_t samples_out() const noexcept { return samples_out_; }

  std::span<const RegisterWord> integrators() const noexcept { return integrators_; }

  std::int64_t input_min() const noexcept { return input_min_; }
  std::int64_t input_max() const noexcept { return input_max_; }

 private:
  void check_input(std::int64_t x) const;
  std::optional<std::int64_t> step(std::int64_t x);
  RegisterWord run_combs(RegisterWord value);

  CicConfig config_;
  int width_;
  std::int64_t input_min_;
  std::int64_t input_max_;
  std::vector<RegisterWord> integrators_;
  // Comb k's M most recent inputs live in combs_[k*M .. k*M+M), ring-indexed
  // by comb_pos_.
  std::vector<RegisterWord> combs_;
  int comb_pos_ = 0;
  int phase_ = 0;
  std::uint64_t samples_in_ = 0;
  std::uint64_t samples_out_ = 0;
};

}  // namespace cic
